#include "golodkit/golod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace golodkit {

PairVerdict gcd_condition(const MonomialIdeal& ideal)
{
    PairVerdict v;
    const auto& g = ideal.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (!coprime(g[i], g[j]))
                continue;
            Monomial l = g[i] * g[j];
            bool covered = false;
            for (std::size_t k = 0; k < g.size() && !covered; ++k)
                covered = k != i && k != j && divides(g[k], l);
            if (!covered) {
                v.holds = false;
                v.first = i;
                v.second = j;
                return v;
            }
        }
    return v;
}

StronglyGenericVerdict is_strongly_generic(const MonomialIdeal& ideal)
{
    StronglyGenericVerdict v;
    const auto& g = ideal.generators();
    for (std::size_t x = 0; x < ideal.nvars(); ++x)
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j)
                if (g[i][x] != 0 && g[i][x] == g[j][x]) {
                    v.holds = false;
                    v.variable = x;
                    v.first = i;
                    v.second = j;
                    return v;
                }
    return v;
}

PairVerdict is_generic(const MonomialIdeal& ideal)
{
    PairVerdict v;
    const auto& g = ideal.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            bool shares = false;
            for (std::size_t x = 0; x < ideal.nvars() && !shares; ++x)
                shares = g[i][x] != 0 && g[i][x] == g[j][x];
            if (!shares)
                continue;
            Monomial l = lcm(g[i], g[j]);
            auto supp = l.support();
            bool ok = false;
            for (std::size_t k = 0; k < g.size() && !ok; ++k) {
                if (k == i || k == j || !divides(g[k], l))
                    continue;
                ok = (l / g[k]).support() == supp;
            }
            if (!ok) {
                v.holds = false;
                v.first = i;
                v.second = j;
                return v;
            }
        }
    return v;
}

CellPairVerdict lcm_condition(const MonomialIdeal& ideal, const std::vector<CellId>& critical)
{
    CellPairVerdict v;
    std::unordered_set<CellId> crit(critical.begin(), critical.end());
    std::vector<CellId> cells;
    for (CellId c : critical)
        if (c)
            cells.push_back(c);
    std::sort(cells.begin(), cells.end(), cell_less);
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = a + 1; b < cells.size(); ++b) {
            CellId u = cells[a], w = cells[b];
            if ((u & w) || !crit.count(u | w))
                continue;
            if (ideal.multidegree(u) * ideal.multidegree(w) == ideal.multidegree(u | w)) {
                v.holds = false;
                v.u = u;
                v.v = w;
                return v;
            }
        }
    return v;
}

CellPairVerdict product_trivial(const MerkulovTransfer& t)
{
    auto a = check_arity_minimal(t, 2);
    CellPairVerdict v;
    v.holds = a.minimal;
    if (!a.minimal) {
        v.u = a.offender[0];
        v.v = a.offender[1];
        v.value = a.value;
    }
    return v;
}

std::vector<std::int64_t> serre_bound_series(const std::vector<std::size_t>& ranks, std::size_t m, std::size_t T)
{
    auto add = [](std::int64_t a, std::int64_t b) {
        std::int64_t out;
        if (__builtin_add_overflow(a, b, &out))
            throw std::overflow_error("series coefficient overflows int64");
        return out;
    };
    auto mul = [](std::int64_t a, std::int64_t b) {
        std::int64_t out;
        if (__builtin_mul_overflow(a, b, &out))
            throw std::overflow_error("series coefficient overflows int64");
        return out;
    };
    // binomial coefficients of (1+t)^m
    std::vector<std::int64_t> numer(T + 1, 0);
    numer[0] = 1;
    for (std::size_t k = 1; k <= std::min(T, m); ++k)
        numer[k] = mul(numer[k - 1], static_cast<std::int64_t>(m - k + 1)) / static_cast<std::int64_t>(k);

    std::vector<std::int64_t> c(T + 1, 0);
    for (std::size_t k = 0; k <= T; ++k) {
        std::int64_t v = numer[k];
        for (std::size_t i = 1; i < ranks.size() && i + 1 <= k; ++i)
            v = add(v, mul(static_cast<std::int64_t>(ranks[i]), c[k - i - 1]));
        c[k] = v;
    }
    return c;
}

bool serre_series_sane(const std::vector<std::size_t>& ranks, const std::vector<std::int64_t>& series)
{
    for (auto x : series)
        if (x < 0)
            return false;
    for (std::size_t k = 1; k < ranks.size() && k + 1 < series.size(); ++k)
        if (series[k + 1] < static_cast<std::int64_t>(ranks[k]))
            return false;
    return true;
}

const char* to_string(Resolvability r)
{
    switch (r) {
    case Resolvability::witnessed:
        return "witnessed";
    case Resolvability::witnessed_by_classification:
        return "witnessed-by-classification";
    case Resolvability::unknown:
        return "unknown";
    }
    return "unknown";
}

const char* to_string(Conclusion c)
{
    switch (c) {
    case Conclusion::golod:
        return "Golod";
    case Conclusion::not_golod:
        return "not Golod";
    case Conclusion::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

std::vector<Strategy> default_strategies(std::uint64_t seed)
{
    std::vector<Strategy> s(4);
    s[1].kind = Strategy::Kind::revlex;
    s[2].kind = s[3].kind = Strategy::Kind::random;
    s[2].seed = seed;
    s[3].seed = seed + 1;
    return s;
}

namespace {

bool downward_closed(const std::vector<CellId>& critical)
{
    std::unordered_set<CellId> crit(critical.begin(), critical.end());
    for (CellId c : critical)
        for (CellId rest = c; rest; rest &= rest - 1)
            if (!crit.count(c & ~(rest & (~rest + 1))))
                return false;
    return true;
}

std::vector<std::size_t> degree_counts(const std::vector<CellId>& cells)
{
    std::vector<std::size_t> out;
    for (CellId c : cells) {
        auto d = static_cast<std::size_t>(cell_degree(c));
        if (out.size() <= d)
            out.resize(d + 1, 0);
        ++out[d];
    }
    return out;
}

MatchingRun describe(const ComplexPtr& taylor, std::string name, Matching m, bool valid)
{
    MatchingRun run;
    run.name = std::move(name);
    run.matching = std::move(m);
    run.valid = valid;
    if (!valid) {
        run.maximal = false;
        return run;
    }
    MorseReduction red(taylor, run.matching, false);
    run.maximal = is_minimal(*red.morse_complex()).minimal;
    run.downward_closed = downward_closed(red.critical());
    run.critical_counts = degree_counts(red.critical());
    return run;
}

std::string tuple_name(const CellTuple& t, std::size_t r)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? ", " : "") + cell_name(t[i], r);
    return s + ")";
}

} // namespace

ResolvabilityWitness simplicially_resolvable_witness(const ComplexPtr& taylor, const std::vector<Strategy>& strategies,
                                                     bool jollenbeck)
{
    ResolvabilityWitness w;
    MorseGraph g(taylor);
    for (const auto& s : strategies)
        w.runs.push_back(describe(taylor, s.name(), greedy_maximal_matching(g, s), true));
    if (jollenbeck) {
        auto rep = jollenbeck_matching(taylor);
        w.runs.push_back(describe(taylor, "jollenbeck", rep.matching, rep.valid_on_taylor));
    }
    for (std::size_t k = 0; k < w.runs.size(); ++k)
        if (w.runs[k].valid && w.runs[k].maximal && w.runs[k].downward_closed) {
            w.status = Resolvability::witnessed;
            w.run = k;
            return w;
        }
    const auto& ideal = taylor->ideal();
    if (is_strongly_generic(ideal).holds) {
        w.status = Resolvability::witnessed_by_classification;
        w.classification = "strongly generic";
    } else if (is_generic(ideal).holds) {
        w.status = Resolvability::witnessed_by_classification;
        w.classification = "generic";
    }
    return w;
}

GolodReport golod_decision(std::shared_ptr<const MonomialIdeal> ideal, const GolodConfig& config)
{
    if (config.max_arity < 2)
        throw std::invalid_argument("max arity must be at least 2");
    GolodReport rep;
    const std::size_t r = ideal->size();
    const auto& vars = ideal->vars();
    rep.ideal = ideal->to_string();
    rep.field = config.field.name();
    rep.seed = config.seed;
    rep.max_arity = config.max_arity;
    rep.generators = r;

    auto T = taylor(ideal, config.field, false);
    rep.resolvability = simplicially_resolvable_witness(T, config.strategies, config.jollenbeck);
    const auto& runs = rep.resolvability.runs;

    std::optional<std::size_t> primary = rep.resolvability.run;
    for (std::size_t k = 0; k < runs.size() && !primary; ++k)
        if (runs[k].valid && runs[k].maximal)
            primary = k;
    if (!primary)
        throw std::logic_error("no maximal matching among the configured strategies");
    rep.primary_matching = runs[*primary].name;

    auto red = std::make_shared<MorseReduction>(T, runs[*primary].matching);
    MerkulovTransfer transfer(red);
    auto morse = red->morse_complex();
    rep.tor_ranks = morse->rank_vector();

    for (const auto& run : runs)
        if (run.valid && run.maximal && run.critical_counts != rep.tor_ranks)
            rep.consistency_violations.push_back("critical counts of " + run.name + " differ from " +
                                                 rep.primary_matching);

    rep.gcd = gcd_condition(*ideal);
    rep.strongly_generic = is_strongly_generic(*ideal);
    rep.generic = is_generic(*ideal);
    rep.product = product_trivial(transfer);

    for (int n = 2; n <= config.max_arity; ++n) {
        auto a = check_arity_minimal(transfer, n);
        ArityEntry e;
        e.arity = n;
        e.minimal = a.minimal;
        e.offender = a.offender;
        e.value = a.value.to_string(vars, r);
        e.unit_cell = a.unit_cell;
        e.evaluated = a.evaluated;
        rep.arities.push_back(e);
        if (!a.minimal && n >= 3 && rep.indeterminacy.empty()) {
            // products of proper consecutive sub-tuples
            for (std::size_t len = 2; len < a.offender.size(); ++len)
                for (std::size_t s = 0; s + len <= a.offender.size(); ++s) {
                    Monomial mu(ideal->nvars());
                    for (std::size_t i = s; i < s + len; ++i)
                        mu = mu * ideal->multidegree(a.offender[i]);
                    rep.indeterminacy.push_back({mu, multigraded_basis(*morse, mu).size()});
                }
        }
    }
    auto first_nonminimal = std::find_if(rep.arities.begin(), rep.arities.end(),
                                         [](const ArityEntry& e) { return !e.minimal; });
    bool all_minimal = first_nonminimal == rep.arities.end();

    if (rep.resolvability.run)
        rep.lcm = lcm_condition(*ideal, red->critical());

    rep.all_cl2_matched = false;
    for (const auto& run : runs) {
        if (!run.valid || !run.maximal)
            continue;
        std::unordered_set<CellId> crit;
        for (CellId c : MorseReduction(T, run.matching, false).critical())
            crit.insert(c);
        bool covers = true;
        for (CellId c : T->cells())
            if (c && ideal->cl(c) >= 2 && crit.count(c))
                covers = false;
        if (covers) {
            rep.all_cl2_matched = true;
            // only a contradiction for simplicially resolvable rings
            if (!all_minimal && rep.resolvability.status != Resolvability::unknown)
                rep.consistency_violations.push_back("matching " + run.name +
                                                     " matches every cell with cl >= 2 but some nu_n is not minimal");
            break;
        }
    }

    bool witnessed = rep.resolvability.status != Resolvability::unknown;
    if (config.jollenbeck && runs.back().name == "jollenbeck" && runs.back().valid) {
        rep.standard = is_standard_matching(T, runs.back().matching);
        if (rep.standard->standard && witnessed)
            for (const auto& e : rep.arities)
                if (e.arity >= 3 && !e.minimal)
                    rep.consistency_violations.push_back("standard matching found but nu_" +
                                                         std::to_string(e.arity) + " is not minimal");
    }

    if (witnessed) {
        if (rep.product.holds != rep.gcd.holds)
            rep.consistency_violations.push_back("gcd condition and product triviality disagree");
        if (rep.lcm && rep.lcm->holds != rep.gcd.holds)
            rep.consistency_violations.push_back("gcd condition and lcm condition disagree");
        if (rep.gcd.holds && !all_minimal)
            rep.consistency_violations.push_back("gcd condition holds but some nu_n is not minimal");
        std::string basis = rep.resolvability.run
                                ? "simplicially resolvable (critical cells of " + rep.primary_matching +
                                      " form a simplicial complex)"
                                : "simplicially resolvable (" + rep.resolvability.classification + " ideal)";
        if (rep.gcd.holds) {
            rep.conclusion = Conclusion::golod;
            rep.justification = basis + "; for such rings Golod is equivalent to the gcd condition, which holds";
        } else {
            rep.conclusion = Conclusion::not_golod;
            rep.justification = basis + "; for such rings Golod is equivalent to the gcd condition, which fails at (" +
                                ideal->generator(rep.gcd.first).to_string(vars) + ", " +
                                ideal->generator(rep.gcd.second).to_string(vars) + ")";
        }
    } else if (!all_minimal) {
        rep.conclusion = Conclusion::not_golod;
        rep.justification = "nu_" + std::to_string(first_nonminimal->arity) + tuple_name(first_nonminimal->offender, r) +
                            " = " + first_nonminimal->value + " has a unit coefficient on " +
                            cell_name(first_nonminimal->unit_cell, r) +
                            "; a Golod ring has every transferred operation minimal";
    } else {
        rep.conclusion = Conclusion::inconclusive;
        rep.justification = "no simplicial-resolvability witness; satisfies B_" + std::to_string(config.max_arity) +
                            " (nu_2..nu_" + std::to_string(config.max_arity) + " minimal), which does not imply Golod";
    }
    return rep;
}

nlohmann::json GolodReport::to_json() const
{
    using nlohmann::json;
    std::size_t r = generators;
    auto tuple = [r](const CellTuple& t) {
        json a = json::array();
        for (CellId c : t)
            a.push_back(cell_name(c, r));
        return a;
    };
    json j;
    j["schema"] = "golodkit.golod-report/1";
    j["header"] = {{"seed", seed}, {"field", field}, {"max_arity", max_arity}};
    j["ideal"] = ideal;
    j["tor_ranks"] = tor_ranks;
    j["gcd_condition"] = {{"holds", gcd.holds}};
    if (!gcd.holds)
        j["gcd_condition"]["witness"] = {gcd.first + 1, gcd.second + 1};
    j["strongly_generic"] = {{"holds", strongly_generic.holds}};
    if (!strongly_generic.holds)
        j["strongly_generic"]["witness"] = {{"variable", strongly_generic.variable + 1},
                                            {"generators", {strongly_generic.first + 1, strongly_generic.second + 1}}};
    j["generic"] = {{"holds", generic.holds}};
    if (!generic.holds)
        j["generic"]["witness"] = {generic.first + 1, generic.second + 1};

    json runs = json::array();
    for (std::size_t k = 0; k < resolvability.runs.size(); ++k) {
        const auto& run = resolvability.runs[k];
        runs.push_back({{"name", run.name},
                        {"valid", run.valid},
                        {"maximal", run.maximal},
                        {"downward_closed", run.downward_closed},
                        {"critical_counts", run.critical_counts},
                        {"arrows", run.matching.size()}});
    }
    j["resolvability"] = {{"status", to_string(resolvability.status)}, {"matchings", runs}};
    if (resolvability.run)
        j["resolvability"]["witness"] = resolvability.runs[*resolvability.run].name;
    if (!resolvability.classification.empty())
        j["resolvability"]["classification"] = resolvability.classification;
    j["primary_matching"] = primary_matching;

    if (lcm) {
        j["lcm_condition"] = {{"holds", lcm->holds}};
        if (!lcm->holds)
            j["lcm_condition"]["witness"] = {cell_name(lcm->u, r), cell_name(lcm->v, r)};
    }
    j["product_trivial"] = {{"holds", product.holds}};
    if (!product.holds)
        j["product_trivial"]["witness"] = {{"inputs", {cell_name(product.u, r), cell_name(product.v, r)}}};

    json ar = json::array();
    for (const auto& e : arities) {
        json x = {{"arity", e.arity}, {"minimal", e.minimal}, {"tuples_evaluated", e.evaluated}};
        if (!e.minimal) {
            x["offender"] = tuple(e.offender);
            x["value"] = e.value;
            x["unit_cell"] = cell_name(e.unit_cell, r);
        }
        ar.push_back(x);
    }
    j["arity_minimality"] = ar;
    if (!indeterminacy.empty()) {
        json ind = json::array();
        // variable names are not stored; exponents suffice for machine use
        for (const auto& c : indeterminacy)
            ind.push_back({{"multidegree", c.multidegree.exponents()}, {"basis_cells", c.basis_cells}});
        j["indeterminacy"] = ind;
    }
    if (all_cl2_matched)
        j["all_cl2_cells_matched"] = *all_cl2_matched;
    if (standard) {
        j["standard_matching"] = {{"standard", standard->standard}};
        if (!standard->standard) {
            j["standard_matching"]["violated_clause"] = standard->violated_clause;
            j["standard_matching"]["detail"] = standard->detail;
        }
    }
    j["consistency_violations"] = consistency_violations;
    j["strict_unit_convention"] = strict_unit_convention;
    j["conclusion"] = to_string(conclusion);
    j["justification"] = justification;
    return j;
}

std::string GolodReport::to_text() const
{
    std::ostringstream os;
    std::size_t r = generators;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "# seed " << seed << ", field " << field << ", max arity " << max_arity << "\n";
    os << ideal << "\n";
    os << "tor ranks:";
    for (auto x : tor_ranks)
        os << " " << x;
    os << "\n";
    os << "gcd condition:          " << yn(gcd.holds);
    if (!gcd.holds)
        os << "  (generators " << gcd.first + 1 << ", " << gcd.second + 1 << ")";
    os << "\nstrongly generic:       " << yn(strongly_generic.holds);
    os << "\ngeneric:                " << yn(generic.holds);
    os << "\nsimplicially resolvable: " << to_string(resolvability.status);
    if (resolvability.run)
        os << " via " << resolvability.runs[*resolvability.run].name;
    else if (!resolvability.classification.empty())
        os << " (" << resolvability.classification << ")";
    os << "\n";
    for (const auto& run : resolvability.runs) {
        os << "  matching " << run.name << ": " << run.matching.size() << " arrows";
        if (!run.valid)
            os << ", not a Morse matching of the Taylor complex";
        else
            os << ", maximal " << yn(run.maximal) << ", simplicial " << yn(run.downward_closed);
        os << "\n";
    }
    if (lcm) {
        os << "lcm condition:          " << yn(lcm->holds);
        if (!lcm->holds)
            os << "  (" << cell_name(lcm->u, r) << ", " << cell_name(lcm->v, r) << ")";
        os << "\n";
    }
    os << "product trivial:        " << yn(product.holds);
    if (!product.holds)
        os << "  (" << cell_name(product.u, r) << ", " << cell_name(product.v, r) << ")";
    os << "\n";
    for (const auto& e : arities) {
        os << "nu_" << e.arity << " minimal:           " << yn(e.minimal);
        if (!e.minimal)
            os << "  " << tuple_name(e.offender, r) << " -> " << e.value << " (unit on " << cell_name(e.unit_cell, r)
               << ")";
        os << "\n";
    }
    if (standard) {
        os << "staged matching standard: " << yn(standard->standard);
        if (!standard->standard)
            os << " (clause " << standard->violated_clause << ": " << standard->detail << ")";
        os << "\n";
    }
    for (const auto& v : consistency_violations)
        os << "CONSISTENCY: " << v << "\n";
    os << "conclusion: " << to_string(conclusion) << "\n";
    os << "  " << justification << "\n";
    os << "  (operations with a degree-0 input are set to zero above arity 2)\n";
    return os.str();
}

} // namespace golodkit
