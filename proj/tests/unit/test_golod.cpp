#include "support.hpp"

#include "golodkit/export.hpp"
#include "golodkit/golod.hpp"
#include "golodkit/jollenbeck.hpp"
#include "golodkit/verify.hpp"

#include <doctest.h>

#include <json.hpp>

#include <random>

using namespace golodkit;

namespace {

// Independent brute-force versions of the combinatorial criteria.
bool brute_gcd(const MonomialIdeal& I)
{
    for (std::size_t i = 0; i < I.size(); ++i)
        for (std::size_t j = i + 1; j < I.size(); ++j) {
            if (!coprime(I.generator(i), I.generator(j)))
                continue;
            auto l = lcm(I.generator(i), I.generator(j));
            bool third = false;
            for (std::size_t k = 0; k < I.size(); ++k)
                third = third || (k != i && k != j && divides(I.generator(k), l));
            if (!third)
                return false;
        }
    return true;
}

bool brute_strongly_generic(const MonomialIdeal& I)
{
    for (std::size_t v = 0; v < I.nvars(); ++v)
        for (std::size_t i = 0; i < I.size(); ++i)
            for (std::size_t j = i + 1; j < I.size(); ++j) {
                auto a = I.generator(i)[v], b = I.generator(j)[v];
                if (a && a == b)
                    return false;
            }
    return true;
}

std::vector<std::int64_t> long_division(const std::vector<std::size_t>& ranks, std::size_t m, std::size_t T)
{
    // numerator (1+t)^m, denominator 1 - sum_{i>=1} beta_i t^{i+1}
    std::vector<std::int64_t> num(T + 1, 0), den(T + 1, 0), out(T + 1, 0);
    for (std::size_t k = 0; k <= std::min(m, T); ++k) {
        std::int64_t b = 1;
        for (std::size_t j = 0; j < k; ++j)
            b = b * static_cast<std::int64_t>(m - j) / static_cast<std::int64_t>(j + 1);
        num[k] = b;
    }
    den[0] = 1;
    for (std::size_t i = 1; i < ranks.size(); ++i)
        if (i + 1 <= T)
            den[i + 1] -= static_cast<std::int64_t>(ranks[i]);
    for (std::size_t k = 0; k <= T; ++k) {
        std::int64_t acc = num[k];
        for (std::size_t j = 1; j <= k; ++j)
            acc -= den[j] * out[k - j];
        out[k] = acc;
    }
    return out;
}

GolodReport decide(const std::string& name)
{
    return golod_decision(testing::fixture_ideal(name), GolodConfig{});
}

} // namespace

TEST_SUITE("golod")
{
    TEST_CASE("combinatorial criteria on the fixtures")
    {
        CHECK(gcd_condition(*testing::fixture_ideal("fourgen")).holds);
        CHECK(gcd_condition(*testing::fixture_ideal("katthan")).holds);
        auto a = gcd_condition(*testing::fixture_ideal("avramov"));
        CHECK_FALSE(a.holds);
        CHECK(a.first == 0);
        CHECK(a.second == 3);
        auto s = is_strongly_generic(*testing::fixture_ideal("fourgen"));
        CHECK_FALSE(s.holds);
        CHECK(s.variable == 0);
        auto three = testing::ideal("ring x y z; ideal x^2*y, y^3*z, x*z^2;");
        CHECK(is_strongly_generic(*three).holds);
        CHECK(is_generic(*three).holds);
        // x appears with exponent 1 twice; z^2 divides lcm(x*y, x*z) only with a smaller support
        auto g = testing::ideal("ring x y z; ideal x*y, x*z, y*z;");
        CHECK_FALSE(is_generic(*g).holds);
    }

    TEST_CASE("criteria agree with brute force on random ideals")
    {
        std::mt19937_64 rng(123);
        for (int it = 0; it < 300; ++it) {
            auto I = random_ideal(rng, RandomIdealShape{});
            CHECK(gcd_condition(I).holds == brute_gcd(I));
            CHECK(is_strongly_generic(I).holds == brute_strongly_generic(I));
            // strongly generic implies generic
            if (is_strongly_generic(I).holds)
                CHECK(is_generic(I).holds);
        }
    }

    TEST_CASE("Serre bound small cases")
    {
        CHECK(serre_bound_series({1}, 1, 3) == std::vector<std::int64_t>{1, 1, 0, 0});
        CHECK(serre_bound_series({1, 1}, 1, 3) == std::vector<std::int64_t>{1, 1, 1, 1});
        // (x, y): (1+t)^2 / (1 - 2t^2 - t^3)
        CHECK(serre_bound_series({1, 2, 1}, 2, 4) == std::vector<std::int64_t>{1, 2, 3, 5, 8});
    }

    TEST_CASE("Serre bound agrees with long division")
    {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::size_t> d(0, 9);
        for (int it = 0; it < 200; ++it) {
            std::vector<std::size_t> ranks{1};
            std::size_t len = 1 + it % 5;
            for (std::size_t k = 0; k < len; ++k)
                ranks.push_back(d(rng));
            std::size_t m = 1 + it % 6;
            auto s = serre_bound_series(ranks, m, 8);
            CHECK(s == long_division(ranks, m, 8));
        }
    }

    TEST_CASE("Serre bound is sane for real Betti numbers")
    {
        for (const char* name : {"fourgen", "pentagon", "avramov", "katthan"}) {
            auto I = testing::fixture_ideal(name);
            auto ranks = tor_ranks(*taylor(I, Field::rationals(), false));
            CHECK(serre_series_sane(ranks, serre_bound_series(ranks, I->nvars(), 10)));
        }
    }

    TEST_CASE("Serre bound overflow is reported")
    {
        CHECK_THROWS_AS(serre_bound_series({1, 1000000}, 20, 60), std::overflow_error);
    }

    TEST_CASE("decisions on the fixtures")
    {
        auto four = decide("fourgen");
        CHECK(four.conclusion == Conclusion::golod);
        CHECK(four.resolvability.status == Resolvability::witnessed);
        CHECK(four.exit_code() == 0);

        auto pent = decide("pentagon");
        CHECK(pent.conclusion == Conclusion::not_golod);
        REQUIRE(pent.arities.size() >= 1);
        CHECK_FALSE(pent.arities[0].minimal);

        auto avr = decide("avramov");
        CHECK(avr.conclusion == Conclusion::not_golod);
        CHECK_FALSE(avr.gcd.holds);

        // trivial product, but a ternary operation with a unit coefficient
        auto kat = decide("katthan");
        CHECK(kat.gcd.holds);
        CHECK(kat.product.holds);
        CHECK(kat.conclusion == Conclusion::not_golod);
        REQUIRE(kat.arities.size() >= 2);
        CHECK(kat.arities[1].arity == 3);
        CHECK_FALSE(kat.arities[1].minimal);
        CHECK(kat.consistency_violations.empty());
    }

    TEST_CASE("small textbook cases")
    {
        auto tri = golod_decision(testing::ideal("ring x1 x2 x3; ideal x1*x2, x2*x3, x1*x3;"), GolodConfig{});
        CHECK(tri.conclusion == Conclusion::golod);
        auto ci = golod_decision(testing::ideal("ring x y; ideal x, y;"), GolodConfig{});
        CHECK(ci.conclusion == Conclusion::not_golod);
        auto principal = golod_decision(testing::ideal("ring x; ideal x^3;"), GolodConfig{});
        CHECK(principal.conclusion == Conclusion::golod);
    }

    TEST_CASE("report JSON carries every field")
    {
        auto j = decide("katthan").to_json();
        for (const char* key : {"schema", "ideal", "tor_ranks", "gcd_condition", "generic", "strongly_generic",
                                "resolvability", "product_trivial", "arity_minimality", "conclusion",
                                "justification", "consistency_violations", "strict_unit_convention"})
            CHECK_MESSAGE(j.contains(key), key);
        CHECK(j["schema"] == "golodkit.golod-report/1");
        CHECK(j["conclusion"] == "not Golod");
        CHECK(j["tor_ranks"] == nlohmann::json::array({1, 8, 14, 8, 1}));
        auto text = decide("fourgen").to_text();
        CHECK(text.find("Golod") != std::string::npos);
    }

    TEST_CASE("decisions do not depend on the field of coefficients here")
    {
        for (const char* name : {"fourgen", "pentagon", "avramov"}) {
            GolodConfig cfg;
            cfg.field = Field::prime(2);
            CHECK(golod_decision(testing::fixture_ideal(name), cfg).conclusion == decide(name).conclusion);
        }
    }

    TEST_CASE("staged construction")
    {
        for (const char* name : {"fourgen", "pentagon"}) {
            auto T = taylor(testing::fixture_ideal(name), Field::rationals());
            auto rep = jollenbeck_matching(T);
            CHECK(rep.valid_on_taylor);
            CHECK(rep.maximal);
            CHECK_FALSE(rep.stalled);
            CHECK(rep.final_complex->rank_vector() == tor_ranks(*T));
            auto v = is_standard_matching(T, rep.matching);
            CHECK_MESSAGE(v.standard, name << ": " << v.detail);
        }
        auto K = taylor(testing::fixture_ideal("katthan"), Field::rationals(), false);
        auto kat = jollenbeck_matching(K);
        CHECK(kat.valid_on_taylor);
        CHECK(kat.stalled);
        CHECK_FALSE(kat.maximal);
    }

    TEST_CASE("the unit matching on the avramov ideal is not standard")
    {
        auto I = testing::fixture_ideal("avramov");
        auto T = taylor(I, Field::prime(2));
        auto m = matching_from_json(nlohmann::json::parse(testing::read_fixture("avramov_unit.matching.json")), 5);
        auto v = is_standard_matching(T, m);
        CHECK_FALSE(v.standard);
        CHECK(v.violated_clause == 5);
    }

    TEST_CASE("resolvability is never refuted")
    {
        auto T = taylor(testing::fixture_ideal("pentagon"), Field::rationals());
        auto w = simplicially_resolvable_witness(T, default_strategies(0));
        CHECK(w.status == Resolvability::unknown);
        CHECK(w.runs.size() >= 4);
        for (const auto& run : w.runs) {
            CHECK(run.valid);
            CHECK(run.critical_counts == std::vector<std::size_t>{1, 5, 5, 1});
        }
        auto F = taylor(testing::fixture_ideal("fourgen"), Field::rationals());
        auto wf = simplicially_resolvable_witness(F, default_strategies(0));
        CHECK(wf.status != Resolvability::unknown);
        REQUIRE(wf.run);
        CHECK(wf.runs[*wf.run].downward_closed);
    }
}
