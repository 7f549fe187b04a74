#include "golodkit/simd/exponent_kernels.hpp"

#include <algorithm>

namespace golodkit::simd {

namespace {

void lcm_ref(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::max(a[i], b[i]);
}

void gcd_ref(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::min(a[i], b[i]);
}

bool divides_ref(const std::uint32_t* a, const std::uint32_t* b, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

bool coprime_ref(const std::uint32_t* a, const std::uint32_t* b, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] && b[i])
            return false;
    return true;
}

bool equal_ref(const std::uint32_t* a, const std::uint32_t* b, std::size_t n)
{
    return std::equal(a, a + n, b);
}

bool add_ref(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n)
{
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
        ok &= !__builtin_add_overflow(a[i], b[i], &out[i]);
    return ok;
}

bool sub_ref(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n)
{
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        ok &= b[i] <= a[i];
        out[i] = a[i] - b[i];
    }
    return ok;
}

constexpr ExponentKernels kScalar{
    "scalar", lcm_ref, gcd_ref, divides_ref, coprime_ref, equal_ref, add_ref, sub_ref,
};

} // namespace

const ExponentKernels& scalar_kernels()
{
    return kScalar;
}

void subset_lcm_table(const ExponentKernels& k, const std::uint32_t* rows, std::size_t r,
                      std::size_t stride, std::uint32_t* out)
{
    std::fill(out, out + stride, 0u);
    for (std::size_t s = 1; s < (std::size_t{1} << r); ++s) {
        std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
        k.lcm(out + (s & (s - 1)) * stride, rows + low * stride, out + s * stride, stride);
    }
}

} // namespace golodkit::simd
