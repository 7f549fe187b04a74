#include "golodkit/simd/exponent_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define GOLODKIT_HAVE_AVX2_TU 1
#endif

namespace golodkit::simd {

#ifdef GOLODKIT_HAVE_AVX2_TU

namespace {

#define AVX2 __attribute__((target("avx2")))

AVX2 inline __m256i load(const std::uint32_t* p)
{
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

AVX2 inline void store(std::uint32_t* p, __m256i v)
{
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

AVX2 void lcm_avx2(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; i += kLanes)
        store(out + i, _mm256_max_epu32(load(a + i), load(b + i)));
}

AVX2 void gcd_avx2(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; i += kLanes)
        store(out + i, _mm256_min_epu32(load(a + i), load(b + i)));
}

AVX2 bool divides_avx2(const std::uint32_t* a, const std::uint32_t* b, std::size_t n)
{
    // a <= b  <=>  max(a, b) == b
    for (std::size_t i = 0; i < n; i += kLanes) {
        __m256i vb = load(b + i);
        __m256i eq = _mm256_cmpeq_epi32(_mm256_max_epu32(load(a + i), vb), vb);
        if (_mm256_movemask_epi8(eq) != -1)
            return false;
    }
    return true;
}

AVX2 bool coprime_avx2(const std::uint32_t* a, const std::uint32_t* b, std::size_t n)
{
    for (std::size_t i = 0; i < n; i += kLanes) {
        __m256i m = _mm256_min_epu32(load(a + i), load(b + i));
        if (!_mm256_testz_si256(m, m))
            return false;
    }
    return true;
}

AVX2 bool equal_avx2(const std::uint32_t* a, const std::uint32_t* b, std::size_t n)
{
    for (std::size_t i = 0; i < n; i += kLanes) {
        __m256i x = _mm256_xor_si256(load(a + i), load(b + i));
        if (!_mm256_testz_si256(x, x))
            return false;
    }
    return true;
}

AVX2 bool add_avx2(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n)
{
    // unsigned overflow iff the sum is below either operand
    __m256i bad = _mm256_setzero_si256();
    for (std::size_t i = 0; i < n; i += kLanes) {
        __m256i va = load(a + i);
        __m256i s = _mm256_add_epi32(va, load(b + i));
        __m256i ok = _mm256_cmpeq_epi32(_mm256_max_epu32(s, va), s);
        bad = _mm256_or_si256(bad, _mm256_xor_si256(ok, _mm256_set1_epi32(-1)));
        store(out + i, s);
    }
    return _mm256_testz_si256(bad, bad);
}

AVX2 bool sub_avx2(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n)
{
    __m256i bad = _mm256_setzero_si256();
    for (std::size_t i = 0; i < n; i += kLanes) {
        __m256i va = load(a + i);
        __m256i vb = load(b + i);
        __m256i ok = _mm256_cmpeq_epi32(_mm256_max_epu32(va, vb), va);
        bad = _mm256_or_si256(bad, _mm256_xor_si256(ok, _mm256_set1_epi32(-1)));
        store(out + i, _mm256_sub_epi32(va, vb));
    }
    return _mm256_testz_si256(bad, bad);
}

#undef AVX2

constexpr ExponentKernels kAvx2{
    "avx2", lcm_avx2, gcd_avx2, divides_avx2, coprime_avx2, equal_avx2, add_avx2, sub_avx2,
};

} // namespace

const ExponentKernels* avx2_kernels()
{
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") != 0;
    }();
    return supported ? &kAvx2 : nullptr;
}

#else

const ExponentKernels* avx2_kernels()
{
    return nullptr;
}

#endif

} // namespace golodkit::simd
