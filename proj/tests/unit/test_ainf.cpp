#include "support.hpp"

#include "golodkit/ainf.hpp"
#include "golodkit/export.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace golodkit;

namespace {

std::shared_ptr<const MorseReduction> reduce_with(const std::string& ideal, const std::string& matching, Field f)
{
    auto I = testing::fixture_ideal(ideal);
    auto T = taylor(I, f);
    auto m = matching_from_json(nlohmann::json::parse(testing::read_fixture(matching)), I->size());
    return std::make_shared<MorseReduction>(T, m);
}

std::shared_ptr<const MorseReduction> reduce_greedy(const std::string& ideal, Field f, const char* strategy = "lex")
{
    auto T = taylor(testing::fixture_ideal(ideal), f);
    MorseGraph g(T);
    return std::make_shared<MorseReduction>(T, greedy_maximal_matching(g, Strategy::parse(strategy)));
}

CellId c(const char* name, std::size_t r) { return parse_cell_name(name, r); }

} // namespace

TEST_SUITE("ainf")
{
    TEST_CASE("binary operation on the worked matching")
    {
        auto red = reduce_with("fourgen", "fourgen_worked.matching.json", Field::rationals());
        MerkulovTransfer t(red);
        const auto& vars = red->complex().ideal().vars();
        auto mu2 = [&](const char* a, const char* b) { return t.mu_critical({c(a, 4), c(b, 4)}).to_string(vars, 4); };
        CHECK(mu2("u1", "u2") == "x2*u12");
        CHECK(mu2("u1", "u3") == "x2*u14 - x2*u34");
        CHECK(mu2("u2", "u4") == "-x4*u12 + x3*u14");
        CHECK(mu2("u1", "u23") == "x2*u123 + x2*x3*u134");
        CHECK(mu2("u4", "u23") == "x4*u123 + x3*x4*u134");
        CHECK(mu2("u12", "u34") == "0");
        CHECK(mu2("u1", "u1") == "0");
        // graded commutativity of the Taylor product survives the transfer here
        CHECK(t.mu_critical({c("u2", 4), c("u1", 4)}).to_string(vars, 4) == "-x2*u12");
    }

    TEST_CASE("ternary operation on the unit matching over F2")
    {
        auto red = reduce_with("avramov", "avramov_unit.matching.json", Field::prime(2));
        MerkulovTransfer t(red);
        const auto& vars = red->complex().ideal().vars();
        CellTuple in{c("u1", 5), c("u3", 5), c("u5", 5)};
        CHECK(t.lambda(in).to_string(vars, 5) == "u1235 + u1345");
        CHECK(t.mu_critical(in).to_string(vars, 5) == "x4*u1234 + u1245 + x1*u2345");
        auto v = check_arity_minimal(t, 3);
        CHECK_FALSE(v.minimal);
        CHECK(v.unit_cell == c("u1245", 5));
        // u1 and u4 are coprime and u14 is critical, so the product is already nonzero
        auto two = check_arity_minimal(t, 2);
        CHECK_FALSE(two.minimal);
        CHECK(two.unit_cell == c("u14", 5));
    }

    TEST_CASE("over QQ the ternary value changes sign")
    {
        auto red = reduce_with("avramov", "avramov_unit.matching.json", Field::rationals());
        MerkulovTransfer t(red);
        const auto& vars = red->complex().ideal().vars();
        CellTuple in{c("u1", 5), c("u3", 5), c("u5", 5)};
        CHECK(t.mu_critical(in).to_string(vars, 5) == "-x4*u1234 - u1245 - x1*u2345");
        CHECK_FALSE(check_arity_minimal(t, 3).minimal);
    }

    TEST_CASE("Stasheff identities up to arity 4")
    {
        for (const char* name : {"fourgen", "pentagon", "avramov"})
            for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
                MerkulovTransfer t(reduce_greedy(name, f, "revlex"));
                auto v = verify_stasheff(t, name == std::string("fourgen") ? 4 : 3);
                CHECK_MESSAGE(v.holds, name << " over " << f.name());
                CHECK(v.evaluated > 0);
            }
    }

    TEST_CASE("strict unit")
    {
        for (Field f : {Field::rationals(), Field::prime(2)}) {
            MerkulovTransfer t(reduce_greedy("avramov", f));
            const auto& b = t.basis();
            for (std::size_t i = 0; i < std::min<std::size_t>(b.size(), 5); ++i)
                for (std::size_t j = 0; j < std::min<std::size_t>(b.size(), 5); ++j) {
                    CHECK(t.mu_critical({0, b[i], b[j]}).is_zero());
                    CHECK(t.mu_critical({b[i], 0, b[j]}).is_zero());
                    CHECK(t.nu({b[i], b[j], 0}).is_zero());
                }
            // in arity 2 the unit acts as the identity
            auto p = t.reduction().p(b[0]);
            CHECK(t.mu_critical({0, b[0]}) == p);
        }
    }

    TEST_CASE("outputs are multihomogeneous")
    {
        MerkulovTransfer t(reduce_greedy("pentagon", Field::rationals()));
        const auto& I = t.taylor().ideal();
        const auto& b = t.basis();
        for (CellId x : b)
            for (CellId y : b)
                for (CellId z : {b[0], b[1], b.back()}) {
                    auto out = t.mu_critical({x, y, z});
                    CHECK(multidegree_consistent(t.taylor(), {I.multidegree(x), I.multidegree(y), I.multidegree(z)},
                                                 out));
                }
    }

    TEST_CASE("short form agrees when the critical cells are downward closed")
    {
        MerkulovTransfer t(reduce_greedy("fourgen", Field::rationals()));
        if (!t.critical_downward_closed()) {
            MESSAGE("lex matching is not downward closed on this ideal");
            return;
        }
        for (CellId x : t.basis())
            for (CellId y : t.basis())
                CHECK(t.nu({x, y}) == t.nu_short({x, y}));
    }

    TEST_CASE("materialized tables include zeros")
    {
        MerkulovTransfer t(reduce_greedy("fourgen", Field::rationals()));
        auto n = t.basis().size();
        auto tab2 = materialize(t, 2, false);
        CHECK(tab2.entries.size() == n * n);
        auto tab3 = materialize(t, 3, true, std::vector<CellId>{t.basis()[0], t.basis()[1]});
        CHECK(tab3.entries.size() == 8);
        CHECK(tab3.morse_coordinates);
        for (const auto& [tuple, value] : tab2.entries)
            CHECK(value == t.mu_critical(tuple));
    }

    TEST_CASE("memoization does not change values")
    {
        auto red = reduce_greedy("avramov", Field::rationals());
        MerkulovTransfer a(red), b(red);
        // warm one instance with every arity-3 tuple first
        materialize(a, 3, false);
        CHECK(a.memo_size() > 0);
        for (CellId x : red->critical())
            for (CellId y : red->critical())
                if (x && y)
                    CHECK(a.mu_critical({x, y, red->critical().back()}) ==
                          b.mu_critical({x, y, red->critical().back()}));
    }
}
