// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include "support.hpp"

#include "golodkit/ainf.hpp"
#include "golodkit/export.hpp"
#include "golodkit/golod.hpp"
#include "golodkit/jollenbeck.hpp"
#include "golodkit/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace golodkit;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    std::vector<std::string> problems;
    std::string note;

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            problems.push_back(what);
    }
};

std::shared_ptr<MorseReduction> reduce_with(const std::shared_ptr<const MonomialIdeal>& I, const std::string& fixture,
                                            Field f)
{
    auto m = matching_from_json(nlohmann::json::parse(testing::read_fixture(fixture)), I->size());
    return std::make_shared<MorseReduction>(taylor(I, f), m);
}

CellId cell(const char* name, std::size_t r) { return parse_cell_name(name, r); }

void worked_homotopy(Outcome& out)
{
    auto I = testing::fixture_ideal("fourgen");
    auto red = reduce_with(I, "fourgen_worked.matching.json", Field::rationals());
    const auto& T = red->complex();
    auto q = Field::rationals();
    auto basis = [&](const char* n) { return ModuleElement::basis(cell(n, 4), q, 4); };
    auto term = [&](const char* n, Monomial m) { return ModuleElement::monomial_term(cell(n, 4), m, Scalar::one(q)); };

    std::map<CellId, ModuleElement> phi = {
        {cell("u24", 4), basis("u124")}, {cell("u13", 4), basis("u134")}, {cell("u234", 4), basis("u1234")}};
    for (CellId c : T.cells()) {
        auto it = phi.find(c);
        auto want = it == phi.end() ? ModuleElement{} : it->second;
        out.expect(red->phi(c) == want, "phi(" + cell_name(c, 4) + ")");
    }
    // x3*u14 - x4*u12 and u123 + x3*u134, built term by term
    auto p24 = term("u14", Monomial({0, 0, 1, 0})) - term("u12", Monomial({0, 0, 0, 1}));
    auto p123 = basis("u123") + term("u134", Monomial({0, 0, 1, 0}));
    out.expect(red->p(cell("u24", 4)) == p24, "p(u24)");
    out.expect(red->p(cell("u1234", 4)).is_zero(), "p(u1234)");
    out.expect(red->p(cell("u123", 4)) == p123, "p(u123)");
}

void binary_table(Outcome& out)
{
    auto I = testing::fixture_ideal("fourgen");
    MerkulovTransfer t(reduce_with(I, "fourgen_worked.matching.json", Field::rationals()));
    const char* y = "x2*u123 + x2*x3*u134";
    // upper triangle over the eight cells below the top, frozen after a hand check
    std::vector<std::tuple<const char*, const char*, std::string>> table = {
        {"u1", "u2", "x2*u12"},           {"u1", "u3", "x2*u14 - x2*u34"}, {"u1", "u4", "x1*u14"},
        {"u1", "u12", "0"},               {"u1", "u14", "0"},              {"u1", "u23", y},
        {"u1", "u34", "0"},               {"u2", "u3", "x2*u23"},          {"u2", "u4", "-x4*u12 + x3*u14"},
        {"u2", "u12", "0"},               {"u2", "u14", "0"},              {"u2", "u23", "0"},
        {"u2", "u34", y},                 {"u3", "u4", "x4*u34"},          {"u3", "u12", y},
        {"u3", "u14", "0"},               {"u3", "u23", "0"},              {"u3", "u34", "0"},
        {"u4", "u12", "0"},               {"u4", "u14", "0"},              {"u4", "u23", "x4*u123 + x3*x4*u134"},
        {"u4", "u34", "0"},               {"u12", "u14", "0"},             {"u12", "u23", "0"},
        {"u12", "u34", "0"},              {"u14", "u23", "0"},             {"u14", "u34", "0"},
        {"u23", "u34", "0"},
    };
    out.expect(table.size() == 28, "table size");
    for (const auto& [a, b, want] : table) {
        auto got = t.mu_critical({cell(a, 4), cell(b, 4)}).to_string(I->vars(), 4);
        out.expect(got == want, std::string("mu2(") + a + "," + b + ") = " + got);
    }
}

void avramov_regression(Outcome& out)
{
    auto I = testing::fixture_ideal("avramov");
    auto f2 = Field::prime(2);
    auto red = reduce_with(I, "avramov_unit.matching.json", f2);
    MerkulovTransfer t(red);
    auto b = [&](const char* n) { return ModuleElement::basis(cell(n, 5), f2, 4); };
    auto term = [&](const char* n, Monomial m) { return ModuleElement::monomial_term(cell(n, 5), m, Scalar::one(f2)); };
    CellTuple in{cell("u1", 5), cell("u3", 5), cell("u5", 5)};

    out.expect(t.lambda(in) == b("u1345") + b("u1235"), "lambda3(u1,u3,u5)");
    auto mu3 = term("u2345", Monomial({1, 0, 0, 0})) + b("u1245") + term("u1234", Monomial({0, 0, 0, 1}));
    out.expect(t.mu_critical(in) == mu3, "mu3(u1,u3,u5)");
    auto v = check_arity_minimal(t, 3);
    out.expect(!v.minimal && v.unit_cell == cell("u1245", 5), "unit witness u1245");
    out.expect(multigraded_basis(*red->morse_complex(), Monomial({0, 1, 1, 2})).empty(),
               "no critical cell of multidegree x2*x3*x4^2");
    GolodConfig cfg;
    cfg.field = f2;
    out.expect(golod_decision(I, cfg).conclusion == Conclusion::not_golod, "not Golod");
}

void katthan_guard(Outcome& out)
{
    auto I = testing::fixture_ideal("katthan");
    out.expect(gcd_condition(*I).holds, "gcd condition");
    auto rep = golod_decision(I, GolodConfig{});
    out.expect(rep.conclusion != Conclusion::golod, "must not conclude Golod");
    out.expect(rep.exit_code() == 2, "exit code " + std::to_string(rep.exit_code()) + ", expected 2");
    std::ostringstream note;
    note << "conclusion=" << to_string(rep.conclusion);
    if (!rep.justification.empty())
        note << "; " << rep.justification;
    out.note = note.str();
}

void rank_oracles(Outcome& out)
{
    auto oracle = nlohmann::json::parse(testing::read_fixture("oracle_values.json"))["tor_ranks"];
    for (const char* name : {"pentagon", "fourgen"}) {
        auto I = testing::fixture_ideal(name);
        auto T = taylor(I, Field::rationals());
        auto want = oracle[name].get<std::vector<std::size_t>>();
        out.expect(tor_ranks(*T) == want, std::string(name) + " tor_ranks");
        MorseGraph g(T);
        auto strategies = default_strategies(0);
        for (std::uint64_t s = 0; s < 16; ++s)
            strategies.push_back(Strategy::parse("random:" + std::to_string(1000 + s)));
        for (const auto& s : strategies) {
            auto m = greedy_maximal_matching(g, s);
            MorseReduction red(T, m);
            out.expect(is_maximal(g, m), std::string(name) + " " + s.name() + " not maximal");
            out.expect(red.morse_complex()->rank_vector() == want, std::string(name) + " " + s.name());
        }
        auto j = jollenbeck_matching(T);
        if (j.maximal)
            out.expect(j.final_complex->rank_vector() == want, std::string(name) + " staged");
    }
}

void property_suite(Outcome& out)
{
    SuiteConfig cfg;
    auto rep = run_property_suite(cfg);
    out.expect(rep.ideals >= 200, "fewer than 200 ideals");
    out.expect(rep.strand_pairs >= 25, "fewer than 25 strand pairs");
    for (const auto& f : rep.failures)
        out.expect(false, f.property + " (seed " + std::to_string(f.seed) + "): " + f.detail);
    out.note = std::to_string(rep.ideals) + " ideals, " + std::to_string(rep.strand_pairs) + " strand pairs";
}

void independence(Outcome& out)
{
    PropertyReport rep;
    std::size_t checked = 0;
    for (const char* name : {"fourgen", "pentagon", "avramov", "katthan"}) {
        check_matching_independence(*testing::fixture_ideal(name), 0, rep);
        ++checked;
    }
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
        check_matching_independence(random_ideal(rng, RandomIdealShape{}), static_cast<std::uint64_t>(k), rep);
        ++checked;
    }
    for (const auto& f : rep.failures)
        out.expect(false, f.property + ": " + f.detail);
    out.note = std::to_string(checked) + " ideals";
}

std::vector<std::int64_t> long_division(const std::vector<std::size_t>& ranks, std::size_t m, std::size_t T)
{
    // (1+t)^m = D(t) * C(t) with D = 1 - sum_{i>=1} beta_i t^{i+1}
    std::vector<std::int64_t> num(T + 1, 0), c(T + 1, 0);
    num[0] = 1;
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = T; j >= 1; --j)
            num[j] += num[j - 1];
    for (std::size_t k = 0; k <= T; ++k) {
        std::int64_t acc = num[k];
        for (std::size_t i = 1; i < ranks.size(); ++i)
            if (i + 1 <= k)
                acc += static_cast<std::int64_t>(ranks[i]) * c[k - i - 1];
        c[k] = acc;
    }
    return c;
}

void serre_bound(Outcome& out)
{
    auto oracle = nlohmann::json::parse(testing::read_fixture("oracle_values.json"))["serre_bound_order_8"];
    for (const char* name : {"fourgen", "pentagon", "avramov", "katthan"}) {
        auto I = testing::fixture_ideal(name);
        auto ranks = tor_ranks(*taylor(I, Field::rationals(), false));
        auto got = serre_bound_series(ranks, I->nvars(), 8);
        out.expect(got == long_division(ranks, I->nvars(), 8), std::string(name) + " vs long division");
        out.expect(got == oracle[name].get<std::vector<std::int64_t>>(), std::string(name) + " vs frozen oracle");
    }
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        double limit_s;
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "worked-example homotopy", 1, worked_homotopy},
        {2, "binary operation table", 1, binary_table},
        {3, "ternary operation regression over F2", 5, avramov_regression},
        {4, "eight-generator guard", 30, katthan_guard},
        {5, "rank oracles", 0, rank_oracles},
        {6, "property suite", 600, property_suite},
        {7, "matching independence", 0, independence},
        {8, "Serre bound", 0, serre_bound},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome out;
        auto t0 = Clock::now();
        try {
            c.run(out);
        } catch (const std::exception& e) {
            out.problems.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (c.limit_s > 0 && secs > c.limit_s)
            out.problems.push_back("runtime " + std::to_string(secs) + " s over the limit");
        bool ok = out.problems.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << secs << " s)";
        if (!out.note.empty())
            std::cout << " [" << out.note << "]";
        std::cout << "\n";
        for (const auto& p : out.problems)
            std::cout << "    " << p << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
