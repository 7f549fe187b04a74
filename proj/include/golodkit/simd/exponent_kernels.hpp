#pragma once

#include <cstddef>
#include <cstdint>

namespace golodkit::simd {

// Exponent vectors are stored padded to a multiple of kLanes so every
// variant can run full-width without a tail loop.
inline constexpr std::size_t kLanes = 8;

constexpr std::size_t padded_length(std::size_t nvars)
{
    return nvars == 0 ? kLanes : (nvars + kLanes - 1) / kLanes * kLanes;
}

struct ExponentKernels {
    const char* name;
    void (*lcm)(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n);
    void (*gcd)(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n);
    // a[i] <= b[i] for all i
    bool (*divides)(const std::uint32_t* a, const std::uint32_t* b, std::size_t n);
    // min(a[i], b[i]) == 0 for all i
    bool (*coprime)(const std::uint32_t* a, const std::uint32_t* b, std::size_t n);
    bool (*equal)(const std::uint32_t* a, const std::uint32_t* b, std::size_t n);
    // out = a + b; false on 32-bit overflow (out is then unspecified)
    bool (*add)(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n);
    // out = a - b; false if some b[i] > a[i]
    bool (*sub)(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n);
};

const ExponentKernels& scalar_kernels();
// nullptr when the variant was not compiled in or the CPU lacks it.
const ExponentKernels* avx2_kernels();
const ExponentKernels* neon_kernels();

// Best available variant, chosen once. GOLODKIT_SIMD=scalar forces the
// reference kernels.
const ExponentKernels& active_kernels();

// out[S] = lcm of rows {j in S} for every subset S of the r rows, each row
// `stride` words long. out must hold (1 << r) * stride words; out[0] = 0.
void subset_lcm_table(const ExponentKernels& k, const std::uint32_t* rows, std::size_t r,
                      std::size_t stride, std::uint32_t* out);

} // namespace golodkit::simd
