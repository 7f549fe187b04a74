#include "golodkit/verify.hpp"

#include "golodkit/ainf.hpp"
#include "golodkit/golod.hpp"
#include "golodkit/ideal_io.hpp"
#include "golodkit/jollenbeck.hpp"
#include "golodkit/morse.hpp"

#include <algorithm>
#include <sstream>

namespace golodkit {

MonomialIdeal random_ideal(std::mt19937_64& rng, const RandomIdealShape& shape)
{
    std::uniform_int_distribution<std::size_t> nv(1, std::max<std::size_t>(1, shape.max_vars));
    std::uniform_int_distribution<std::size_t> ng(1, std::max<std::size_t>(1, shape.max_generators));
    std::uniform_int_distribution<std::uint32_t> ex(0, shape.max_exponent);
    std::size_t m = nv(rng);
    std::size_t r = ng(rng);
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < m; ++i)
        vars.push_back("x" + std::to_string(i + 1));
    std::vector<Monomial> gens;
    while (gens.size() < r) {
        std::vector<std::uint32_t> e(m);
        for (auto& x : e)
            x = ex(rng);
        if (std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; }))
            continue;
        gens.emplace_back(e);
    }
    return minimalize(vars, gens).ideal;
}

SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t r)
{
    std::uniform_int_distribution<std::size_t> nf(1, r + 1);
    std::bernoulli_distribution coin(0.5);
    std::vector<CellId> facets;
    CellId seen = 0;
    for (std::size_t k = nf(rng); k > 0; --k) {
        CellId f = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (coin(rng))
                f |= CellId{1} << i;
        if (f) {
            facets.push_back(f);
            seen |= f;
        }
    }
    for (std::size_t i = 0; i < r; ++i)
        if (!(seen & (CellId{1} << i)))
            facets.push_back(CellId{1} << i);
    return SimplicialComplex::from_facets(r, facets);
}

namespace {

struct Recorder {
    PropertyReport& report;
    std::string ideal;
    std::uint64_t seed;

    // Returns ok so callers can bail out after the first failure.
    bool operator()(const std::string& property, bool ok, const std::string& detail = {})
    {
        ++report.checks[property];
        if (!ok)
            report.failures.push_back({property, ideal, seed, detail});
        return ok;
    }
};

// Pairwise coprime tuples of nonempty cells, at most `cap` of them.
std::vector<CellTuple> coprime_tuples(const BasedComplex& t, int n, std::size_t cap)
{
    std::vector<CellId> cells;
    for (CellId c : t.cells())
        if (c)
            cells.push_back(c);
    std::vector<CellTuple> out;
    CellTuple cur;
    auto rec = [&](auto&& self) -> void {
        if (out.size() >= cap)
            return;
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (CellId c : cells) {
            bool ok = true;
            for (CellId x : cur)
                if (!coprime(t.multidegree(x), t.multidegree(c))) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            cur.push_back(c);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::vector<CellTuple> all_tuples(const std::vector<CellId>& basis, int n)
{
    std::vector<CellTuple> out;
    CellTuple cur(n);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        for (CellId c : basis) {
            cur[k] = c;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

ModuleElement constant_part(const ModuleElement& x)
{
    ElementBuilder b;
    for (const auto& t : x.terms())
        if (t.mono.is_one())
            b.add(t.cell, t.mono, t.coef);
    return b.build();
}

std::string tuple_name(const CellTuple& t, std::size_t r)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + cell_name(t[i], r);
    return s + ")";
}

} // namespace

void check_ideal_properties(const MonomialIdeal& ideal, std::uint64_t seed, PropertyReport& report)
{
    Recorder rec{report, render_ideal(ideal), seed};
    auto ip = std::make_shared<const MonomialIdeal>(ideal);
    Field qq = Field::rationals();
    const auto& vars = ideal.vars();
    std::size_t r = ideal.size();

    ComplexPtr t;
    try {
        t = taylor(ip, qq, true);
    } catch (const std::exception& e) {
        rec("d_squared", false, e.what());
        return;
    }
    rec("d_squared", true);

    MorseGraph g(t);
    Strategy strategy{Strategy::Kind::random, seed};
    Matching m = greedy_maximal_matching(g, strategy);
    auto v = validate_matching(g, m);
    if (!rec("matching_valid", v.valid, v.message))
        return;

    std::shared_ptr<const MorseReduction> red;
    try {
        red = std::make_shared<const MorseReduction>(t, m, true);
    } catch (const std::exception& e) {
        rec("morse_d_squared", false, e.what());
        return;
    }
    rec("morse_d_squared", true);

    auto mc = red->morse_complex();
    rec("morse_minimal", is_minimal(*mc).minimal, strategy.name() + " leaves a unit in the Morse differential");
    rec("morse_ranks", mc->rank_vector() == tor_ranks(*t), "critical counts differ from Betti numbers");

    for (CellId c : t->cells()) {
        auto u = ModuleElement::basis(c, qq, ideal.nvars());
        auto phi = red->phi(c);
        auto pc = red->p(c);
        std::string at = " at " + cell_name(c, r);
        rec("phi_squared", red->phi(phi).is_zero(), "φ²" + at);
        rec("phi_d_phi", red->phi(t->apply_d(phi)) == phi, "φdφ ≠ φ" + at);
        rec("p_idempotent", red->p(pc) == pc, "p² ≠ p" + at);
        rec("homotopy", u - pc == t->apply_d(phi) + red->phi(t->d(c)), "1 - p ≠ dφ + φd" + at);
        // i∘q is the inverse of q on im(p): p(Σ coords · c_crit) = p(c).
        ElementBuilder lifted;
        auto coords = red->q(pc);
        for (const auto& term : coords.terms())
            lifted.add(red->p(term.cell), term.coef, term.mono);
        rec("pqp", lifted.build() == pc, "p q p ≠ p" + at);
    }

    MerkulovTransfer tr(red);
    const auto& basis = tr.basis();
    auto mdeg_of = [&](const CellTuple& tup) {
        std::vector<Monomial> out;
        for (CellId c : tup)
            out.push_back(t->multidegree(c));
        return out;
    };

    // multidegree consistency of λ, μ, ν on critical tuples (sampled at arity 3)
    for (int n = 2; n <= 3; ++n) {
        auto tuples = all_tuples(basis, n);
        if (tuples.size() > 1500) {
            std::mt19937_64 rng(seed ^ 0x51ed270b27a3c6f1ULL);
            std::shuffle(tuples.begin(), tuples.end(), rng);
            tuples.resize(1500);
        }
        for (const auto& tup : tuples) {
            auto md = mdeg_of(tup);
            std::string name = tuple_name(tup, r);
            if (!rec("multidegree_lambda", multidegree_consistent(*t, md, tr.lambda(tup)),
                     "λ" + std::to_string(n) + name + " = " + tr.lambda(tup).to_string(vars, r)))
                return;
            auto mu = tr.mu_critical(tup);
            if (!rec("multidegree_mu", multidegree_consistent(*t, md, mu),
                     "μ" + std::to_string(n) + name + " = " + mu.to_string(vars, r)))
                return;
            auto nu = tr.nu(tup);
            if (!rec("multidegree_nu", multidegree_consistent(*t, md, nu),
                     "ν" + std::to_string(n) + name + " = " + nu.to_string(vars, r)))
                return;
            // q λₙ and νₙ differ by q dφ λₙ, which need not vanish; they agree
            // modulo the maximal ideal, which is all the minimality tests use.
            if (tr.critical_downward_closed() &&
                !rec("nu_short", constant_part(tr.nu_short(tup)) == constant_part(nu),
                     "q λ" + std::to_string(n) + name + " ≠ ν mod (x)"))
                return;
        }
    }

    // supp λₙ has cl ≥ 2 on pairwise coprime Taylor cells
    for (int n = 2; n <= 3; ++n) {
        for (const auto& tup : coprime_tuples(*t, n, 400)) {
            const auto& lam = tr.lambda(tup);
            bool ok = true;
            for (CellId c : lam.support())
                if (ideal.cl(c) < 2)
                    ok = false;
            if (!rec("lambda_support_cl", ok, "λ" + std::to_string(n) + tuple_name(tup, r) + " = " +
                                                  lam.to_string(vars, r)))
                return;
        }
    }

    // strict unit at arity 3
    if (red->is_critical(0)) {
        auto unit = red->p(CellId{0});
        for (std::size_t i = 0; i < basis.size() && i < 6; ++i)
            for (std::size_t j = 0; j < basis.size() && j < 6; ++j) {
                auto a = red->p(basis[i]);
                auto b = red->p(basis[j]);
                for (const auto& args : {std::vector{unit, a, b}, std::vector{a, unit, b}, std::vector{a, b, unit}})
                    if (!rec("strict_unit", red->p(tr.lambda(args)).is_zero(),
                             "p λ3 with a unit input at " + cell_name(basis[i], r) + "," + cell_name(basis[j], r)))
                        return;
            }
    }

    auto st = verify_stasheff(tr, 3);
    std::string detail;
    if (!st.holds)
        detail = "arity " + std::to_string(st.arity) + " at " + tuple_name(st.inputs, r) + ": " +
                 st.residual.to_string(vars, r);
    rec("stasheff", st.holds, detail);
}

void check_strand_pair(const SimplicialComplex& delta, const MonomialIdeal& ideal, std::uint64_t seed,
                       PropertyReport& report)
{
    std::ostringstream id;
    id << render_ideal(ideal) << " with facets";
    for (CellId f : delta.facets())
        id << " " << cell_name(f, ideal.size());
    Recorder rec{report, id.str(), seed};
    Field qq = Field::rationals();
    auto f = simplicial_to_complex(delta, std::make_shared<const MonomialIdeal>(ideal), qq, true);
    bool all_acyclic = true;
    for (const auto& mu : lcm_lattice(ideal)) {
        auto strand = strand_homology(*f, mu);
        auto reduced = reduced_homology_ranks(restrict_to(delta, ideal, mu), qq);
        std::size_t len = std::max(strand.size(), reduced.size());
        strand.resize(len, 0);
        reduced.resize(len, 0);
        // strand degree n is reduced degree n-1, which is entry n of `reduced`
        bool zero = std::all_of(reduced.begin(), reduced.end(), [](std::size_t x) { return x == 0; });
        all_acyclic = all_acyclic && zero;
        if (!rec("strand_vs_restriction", strand == reduced, "multidegree " + mu.to_string(ideal.vars())))
            return;
    }
    rec("is_resolution", is_resolution(delta, ideal, qq).is_resolution == all_acyclic,
        "is_resolution disagrees with the strand check");
}

void check_matching_independence(const MonomialIdeal& ideal, std::uint64_t seed, PropertyReport& report)
{
    Recorder rec{report, render_ideal(ideal), seed};
    auto ip = std::make_shared<const MonomialIdeal>(ideal);
    auto t = taylor(ip, Field::rationals(), false);
    MorseGraph g(t);
    std::optional<std::pair<std::vector<std::size_t>, bool>> first;
    std::string first_name;
    for (const auto& s : default_strategies(seed)) {
        auto red = std::make_shared<const MorseReduction>(t, greedy_maximal_matching(g, s), false);
        MerkulovTransfer tr(red);
        std::pair<std::vector<std::size_t>, bool> got{red->morse_complex()->rank_vector(), product_trivial(tr).holds};
        if (!first) {
            first = got;
            first_name = s.name();
            continue;
        }
        if (!rec("matching_independence", got == *first, s.name() + " disagrees with " + first_name))
            return;
    }
}

PropertyReport run_property_suite(const SuiteConfig& config)
{
    PropertyReport report;
    std::mt19937_64 master(config.seed);
    auto note = [&](const std::string& s) {
        if (config.progress)
            config.progress(s);
    };
    auto stop = [&]() { return config.stop_on_first && !report.ok(); };

    for (std::size_t i = 0; i < config.ideals && !stop(); ++i) {
        std::uint64_t s = master();
        std::mt19937_64 rng(s);
        auto ideal = random_ideal(rng, config.shape);
        check_ideal_properties(ideal, s, report);
        ++report.ideals;
        if ((i + 1) % 50 == 0)
            note("ideals: " + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < config.strand_pairs && !stop(); ++i) {
        std::uint64_t s = master();
        std::mt19937_64 rng(s);
        auto ideal = random_ideal(rng, config.shape);
        auto delta = random_complex(rng, ideal.size());
        check_strand_pair(delta, ideal, s, report);
        ++report.strand_pairs;
    }
    note("strand pairs: " + std::to_string(report.strand_pairs));
    for (std::size_t i = 0; i < config.independence && !stop(); ++i) {
        std::uint64_t s = master();
        std::mt19937_64 rng(s);
        auto ideal = random_ideal(rng, config.shape);
        check_matching_independence(ideal, s, report);
        ++report.independence_ideals;
    }
    note("independence ideals: " + std::to_string(report.independence_ideals));
    return report;
}

} // namespace golodkit
