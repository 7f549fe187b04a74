#include "golodkit/simd/exponent_kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace golodkit::simd {

namespace {

const ExponentKernels& select()
{
    const char* env = std::getenv("GOLODKIT_SIMD");
    if (env && std::string_view(env) == "scalar")
        return scalar_kernels();
    if (const ExponentKernels* k = avx2_kernels())
        return *k;
    if (const ExponentKernels* k = neon_kernels())
        return *k;
    return scalar_kernels();
}

} // namespace

const ExponentKernels& active_kernels()
{
    static const ExponentKernels& chosen = select();
    return chosen;
}

} // namespace golodkit::simd
