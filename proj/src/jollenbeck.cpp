#include "golodkit/jollenbeck.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace golodkit {

namespace {

bool arrow_less(const Arrow& a, const Arrow& b)
{
    if (a.from != b.from)
        return cell_less(a.from, b.from);
    return cell_less(a.to, b.to);
}

std::string arrow_name(const Arrow& a, std::size_t r)
{
    return cell_name(a.from, r) + " -> " + cell_name(a.to, r);
}

std::vector<Arrow> admissible_arrows(const MorseGraph& g, int stage)
{
    const auto& ideal = g.complex().ideal();
    std::vector<Arrow> out;
    for (const auto& e : g.edges())
        if (e.invertible && (e.to & ~e.from) == 0 && ideal.cl(e.from) == 1 && ideal.cl(e.to) == stage)
            out.push_back({e.from, e.to});
    return out;
}

bool is_subset(CellId a, CellId b)
{
    return (a & ~b) == 0;
}

ComplexPtr reduce(const ComplexPtr& f, const Matching& m)
{
    return MorseReduction(f, m, false).morse_complex();
}

} // namespace

JollenbeckReport jollenbeck_matching(const ComplexPtr& taylor)
{
    const auto& ideal = taylor->ideal();
    const std::size_t r = ideal.size();
    const CellId full = ideal.full_cell();
    JollenbeckReport rep;
    ComplexPtr cur = taylor;

    for (int stage = 1; stage <= static_cast<int>(r); ++stage) {
        for (int substep = 1;; ++substep) {
            MorseGraph g(cur);
            auto adm = admissible_arrows(g, stage);
            std::vector<Arrow> minimal;
            for (const auto& a : adm) {
                bool has_sub = std::any_of(adm.begin(), adm.end(), [&](const Arrow& b) {
                    return !(a == b) && is_subset(b.from, a.from) && is_subset(b.to, a.to);
                });
                if (!has_sub)
                    minimal.push_back(a);
            }
            if (minimal.empty())
                break;
            Arrow seed = minimal.front(); // edges come in canonical order

            const Monomial& mu = ideal.multidegree(seed.from);
            std::vector<Arrow> family;
            CellId comp = full & ~seed.from;
            // all subsets w of the complement, w = ∅ included
            for (CellId w = comp;; w = (w - 1) & comp) {
                if (coprime(ideal.multidegree(w), mu)) {
                    const MorseEdge* e = g.find(seed.from | w, seed.to | w);
                    if (e && e->invertible)
                        family.push_back({seed.from | w, seed.to | w, stage, substep});
                }
                if (w == 0)
                    break;
            }
            std::sort(family.begin(), family.end(), arrow_less);

            JollenbeckStep step;
            step.stage = stage;
            step.substep = substep;
            step.seed = seed;
            Matching local(family);
            if (!validate_matching(g, local).valid) {
                step.incremental = true;
                local = Matching();
                for (const auto& a : family) {
                    Matching trial = local;
                    trial.add(a);
                    if (validate_matching(g, trial).valid)
                        local = std::move(trial);
                }
            }
            step.arrows_added = local.size();
            for (const auto& a : local.arrows())
                rep.matching.add(a);
            rep.steps.push_back(step);
            cur = reduce(cur, local);
        }
    }

    MorseGraph gt(taylor);
    auto verdict = validate_matching(gt, rep.matching);
    rep.valid_on_taylor = verdict.valid;
    if (verdict.valid) {
        rep.final_complex = MorseReduction(taylor, rep.matching).morse_complex();
    } else {
        rep.final_complex = cur;
        rep.detail = "union of stages is not a Morse matching of the Taylor complex: " + verdict.message;
    }
    auto minimal = is_minimal(*rep.final_complex);
    rep.maximal = minimal.minimal;
    rep.stalled = !minimal.minimal;
    if (rep.stalled && rep.detail.empty()) {
        auto [s, t] = minimal.offenders.front();
        rep.detail = "construction stalled: no admissible arrow remains but " + cell_name(s, r) + " -> " +
                     cell_name(t, r) + " still has a unit coefficient";
    }
    return rep;
}

StandardVerdict is_standard_matching(const ComplexPtr& taylor, const Matching& m)
{
    const auto& ideal = taylor->ideal();
    const std::size_t r = ideal.size();
    StandardVerdict v;
    auto fail = [&](int clause, std::string detail) {
        v.standard = false;
        v.violated_clause = clause;
        v.detail = std::move(detail);
        return v;
    };

    for (const auto& a : m.arrows())
        if (!(ideal.multidegree(a.from) == ideal.multidegree(a.to)))
            return fail(1, arrow_name(a, r) + " joins different multidegrees");

    MorseGraph gt(taylor);
    auto union_verdict = validate_matching(gt, m);
    if (!union_verdict.valid)
        return fail(3, "not a Morse matching of the Taylor complex: " + union_verdict.message);
    auto morse = MorseReduction(taylor, m, false).morse_complex();
    auto minimal = is_minimal(*morse);
    if (!minimal.minimal) {
        auto [s, t] = minimal.offenders.front();
        return fail(2, "Morse complex edge " + cell_name(s, r) + " -> " + cell_name(t, r) +
                           " joins equal multidegrees");
    }

    std::map<int, std::vector<Arrow>> stages;
    for (auto a : m.arrows()) {
        if (a.stage <= 0)
            a.stage = std::max(1, 1 + ideal.cl(a.to) - ideal.cl(a.from));
        stages[a.stage].push_back(a);
    }

    ComplexPtr cur = taylor;
    for (const auto& [i, arrows] : stages) {
        MorseGraph g(cur);
        auto sv = validate_matching(g, Matching(arrows));
        if (!sv.valid)
            return fail(3, "stage " + std::to_string(i) + " on the iterated complex: " + sv.message);
        cur = reduce(cur, Matching(arrows));
    }

    for (const auto& [i, arrows] : stages)
        for (const auto& a : arrows) {
            if (ideal.cl(a.to) - ideal.cl(a.from) != i - 1)
                return fail(4, arrow_name(a, r) + " in stage " + std::to_string(i) + " has cl(v) - cl(u) = " +
                                   std::to_string(ideal.cl(a.to) - ideal.cl(a.from)));
            if (cell_degree(a.from) != cell_degree(a.to) + 1)
                return fail(4, arrow_name(a, r) + " does not drop one degree");
        }

    const CellId full = ideal.full_cell();
    for (const auto& [i, arrows] : stages) {
        std::set<std::pair<CellId, CellId>> have;
        for (const auto& a : arrows)
            have.insert({a.from, a.to});
        std::set<std::pair<CellId, CellId>> generated;
        for (const auto& b : arrows) {
            if (ideal.cl(b.from) != 1)
                continue;
            if (ideal.cl(b.to) != i)
                return fail(5, arrow_name(b, r) + " in B_" + std::to_string(i) + " has cl(v) != " + std::to_string(i));
            const Monomial& mu = ideal.multidegree(b.from);
            CellId comp = full & ~b.from;
            for (CellId w = comp;; w = (w - 1) & comp) {
                if (coprime(ideal.multidegree(w), mu)) {
                    generated.insert({b.from | w, b.to | w});
                    if (w && !have.count({b.from | w, b.to | w}))
                        return fail(5, "extension " + cell_name(b.from | w, r) + " -> " + cell_name(b.to | w, r) +
                                           " of " + arrow_name(b, r) + " is missing from stage " + std::to_string(i));
                }
                if (w == 0)
                    break;
            }
        }
        for (const auto& a : arrows)
            if (!generated.count({a.from, a.to}))
                return fail(5, arrow_name(a, r) + " in stage " + std::to_string(i) +
                                   " is not generated by B_" + std::to_string(i));
    }
    return v;
}

} // namespace golodkit
