#include "golodkit/simd/exponent_kernels.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace golodkit::simd;

namespace {

std::vector<const ExponentKernels*> variants()
{
    std::vector<const ExponentKernels*> v;
    if (auto* k = avx2_kernels())
        v.push_back(k);
    if (auto* k = neon_kernels())
        v.push_back(k);
    return v;
}

std::vector<std::uint32_t> draw(std::mt19937_64& rng, std::size_t n, std::uint32_t hi)
{
    std::uniform_int_distribution<std::uint32_t> d(0, hi);
    std::vector<std::uint32_t> v(n);
    for (auto& x : v)
        x = d(rng);
    return v;
}

} // namespace

TEST_SUITE("simd")
{
    TEST_CASE("active kernels are one of the compiled variants")
    {
        const auto& a = active_kernels();
        bool known = &a == &scalar_kernels();
        for (auto* k : variants())
            known = known || &a == k;
        CHECK(known);
        MESSAGE("active exponent kernels: " << a.name);
    }

    TEST_CASE("vector variants agree with the scalar reference")
    {
        const auto& ref = scalar_kernels();
        auto vs = variants();
        if (vs.empty()) {
            MESSAGE("no vector variant on this machine; only the reference kernels are exercised");
            return;
        }
        std::mt19937_64 rng(0x5eed);
        for (const auto* k : vs) {
            for (int it = 0; it < 2000; ++it) {
                std::size_t n = kLanes * (1 + it % 3);
                // small exponents make divides/coprime/equal hit both outcomes
                std::uint32_t hi = it % 4 == 0 ? 0xffffffffu : 3;
                auto a = draw(rng, n, hi), b = draw(rng, n, hi);
                if (it % 5 == 0)
                    b = a;
                std::vector<std::uint32_t> o1(n), o2(n);

                ref.lcm(a.data(), b.data(), o1.data(), n);
                k->lcm(a.data(), b.data(), o2.data(), n);
                CHECK(o1 == o2);
                ref.gcd(a.data(), b.data(), o1.data(), n);
                k->gcd(a.data(), b.data(), o2.data(), n);
                CHECK(o1 == o2);
                CHECK(ref.divides(a.data(), b.data(), n) == k->divides(a.data(), b.data(), n));
                CHECK(ref.coprime(a.data(), b.data(), n) == k->coprime(a.data(), b.data(), n));
                CHECK(ref.equal(a.data(), b.data(), n) == k->equal(a.data(), b.data(), n));

                bool s1 = ref.add(a.data(), b.data(), o1.data(), n);
                bool s2 = k->add(a.data(), b.data(), o2.data(), n);
                CHECK(s1 == s2);
                if (s1)
                    CHECK(o1 == o2);
                s1 = ref.sub(a.data(), b.data(), o1.data(), n);
                s2 = k->sub(a.data(), b.data(), o2.data(), n);
                CHECK(s1 == s2);
                if (s1)
                    CHECK(o1 == o2);
            }
        }
    }

    TEST_CASE("subset lcm tables agree across variants")
    {
        std::mt19937_64 rng(99);
        for (std::size_t r : {1u, 3u, 6u, 9u}) {
            std::size_t stride = kLanes;
            auto rows = draw(rng, r * stride, 5);
            std::vector<std::uint32_t> ref((std::size_t{1} << r) * stride);
            subset_lcm_table(scalar_kernels(), rows.data(), r, stride, ref.data());
            for (std::size_t w = 0; w < stride; ++w)
                CHECK(ref[w] == 0);
            // the full subset is the coordinatewise max
            std::size_t full = (std::size_t{1} << r) - 1;
            for (std::size_t w = 0; w < stride; ++w) {
                std::uint32_t m = 0;
                for (std::size_t j = 0; j < r; ++j)
                    m = std::max(m, rows[j * stride + w]);
                CHECK(ref[full * stride + w] == m);
            }
            for (const auto* k : variants()) {
                std::vector<std::uint32_t> out(ref.size());
                subset_lcm_table(*k, rows.data(), r, stride, out.data());
                CHECK(out == ref);
            }
        }
    }

    TEST_CASE("padding")
    {
        CHECK(padded_length(0) == kLanes);
        CHECK(padded_length(1) == kLanes);
        CHECK(padded_length(kLanes) == kLanes);
        CHECK(padded_length(kLanes + 1) == 2 * kLanes);
    }
}
