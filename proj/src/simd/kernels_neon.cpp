#include "golodkit/simd/exponent_kernels.hpp"

#if defined(__ARM_NEON) || defined(__ARM_NEON__)
#include <arm_neon.h>
#define GOLODKIT_HAVE_NEON_TU 1
#endif

namespace golodkit::simd {

#ifdef GOLODKIT_HAVE_NEON_TU

namespace {

// Four lanes per register; kLanes is a multiple of 4 so no tail handling.

void lcm_neon(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; i += 4)
        vst1q_u32(out + i, vmaxq_u32(vld1q_u32(a + i), vld1q_u32(b + i)));
}

void gcd_neon(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; i += 4)
        vst1q_u32(out + i, vminq_u32(vld1q_u32(a + i), vld1q_u32(b + i)));
}

bool divides_neon(const std::uint32_t* a, const std::uint32_t* b, std::size_t n)
{
    for (std::size_t i = 0; i < n; i += 4)
        if (vminvq_u32(vcleq_u32(vld1q_u32(a + i), vld1q_u32(b + i))) == 0)
            return false;
    return true;
}

bool coprime_neon(const std::uint32_t* a, const std::uint32_t* b, std::size_t n)
{
    for (std::size_t i = 0; i < n; i += 4)
        if (vmaxvq_u32(vminq_u32(vld1q_u32(a + i), vld1q_u32(b + i))) != 0)
            return false;
    return true;
}

bool equal_neon(const std::uint32_t* a, const std::uint32_t* b, std::size_t n)
{
    for (std::size_t i = 0; i < n; i += 4)
        if (vminvq_u32(vceqq_u32(vld1q_u32(a + i), vld1q_u32(b + i))) == 0)
            return false;
    return true;
}

bool add_neon(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n)
{
    uint32x4_t bad = vdupq_n_u32(0);
    for (std::size_t i = 0; i < n; i += 4) {
        uint32x4_t va = vld1q_u32(a + i);
        uint32x4_t s = vaddq_u32(va, vld1q_u32(b + i));
        bad = vorrq_u32(bad, vcltq_u32(s, va));
        vst1q_u32(out + i, s);
    }
    return vmaxvq_u32(bad) == 0;
}

bool sub_neon(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n)
{
    uint32x4_t bad = vdupq_n_u32(0);
    for (std::size_t i = 0; i < n; i += 4) {
        uint32x4_t va = vld1q_u32(a + i);
        uint32x4_t vb = vld1q_u32(b + i);
        bad = vorrq_u32(bad, vcltq_u32(va, vb));
        vst1q_u32(out + i, vsubq_u32(va, vb));
    }
    return vmaxvq_u32(bad) == 0;
}

constexpr ExponentKernels kNeon{
    "neon", lcm_neon, gcd_neon, divides_neon, coprime_neon, equal_neon, add_neon, sub_neon,
};

} // namespace

const ExponentKernels* neon_kernels()
{
    return &kNeon;
}

#else

const ExponentKernels* neon_kernels()
{
    return nullptr;
}

#endif

} // namespace golodkit::simd
