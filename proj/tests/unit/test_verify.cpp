#include "golodkit/verify.hpp"

#include <doctest.h>

#include <random>

using namespace golodkit;

TEST_SUITE("verify")
{
    TEST_CASE("random ideals are reproducible and minimal")
    {
        std::mt19937_64 a(42), b(42);
        for (int it = 0; it < 50; ++it) {
            auto I = random_ideal(a, RandomIdealShape{});
            auto J = random_ideal(b, RandomIdealShape{});
            CHECK(I == J);
            CHECK(I.size() >= 1);
            CHECK(I.size() <= 6);
            for (std::size_t i = 0; i < I.size(); ++i)
                for (std::size_t j = 0; j < I.size(); ++j)
                    if (i != j)
                        CHECK_FALSE(divides(I.generator(i), I.generator(j)));
        }
    }

    TEST_CASE("random complexes contain every vertex")
    {
        std::mt19937_64 rng(3);
        for (int it = 0; it < 30; ++it) {
            auto K = random_complex(rng, 5);
            for (std::size_t v = 0; v < 5; ++v)
                CHECK(K.contains(CellId{1} << v));
        }
    }

    TEST_CASE("a small property run passes")
    {
        SuiteConfig cfg;
        cfg.ideals = 30;
        cfg.strand_pairs = 5;
        cfg.independence = 10;
        auto rep = run_property_suite(cfg);
        for (const auto& f : rep.failures)
            MESSAGE(f.property << " seed " << f.seed << ": " << f.detail);
        CHECK(rep.ok());
        CHECK(rep.ideals == 30);
        CHECK(rep.strand_pairs == 5);
        CHECK(rep.independence_ideals == 10);
    }

    TEST_CASE("single ideal checks")
    {
        PropertyReport rep;
        MonomialIdeal I({"x1", "x2", "x3"}, {Monomial({1, 1, 0}), Monomial({0, 1, 1}), Monomial({1, 0, 1})});
        check_ideal_properties(I, 0, rep);
        check_matching_independence(I, 0, rep);
        CHECK(rep.ok());
    }
}
