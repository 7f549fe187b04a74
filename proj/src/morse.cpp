#include "golodkit/morse.hpp"

#include "golodkit/linalg.hpp"
#include "golodkit/topo_order.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace golodkit {

namespace {

std::uint64_t edge_key(CellId from, CellId to)
{
    return (std::uint64_t{from} << 32) | to;
}

} // namespace

MorseGraph::MorseGraph(ComplexPtr complex) : complex_(std::move(complex))
{
    for (CellId a : complex_->cells()) {
        const auto& da = complex_->d(a);
        for (CellId b : da.support()) {
            MorseEdge e;
            e.from = a;
            e.to = b;
            e.coefficient = da.coefficient(b);
            e.invertible = e.coefficient.size() == 1 && e.coefficient.front().first.is_one();
            lookup_[edge_key(a, b)] = edges_.size();
            edges_.push_back(std::move(e));
        }
    }
}

const MorseEdge* MorseGraph::find(CellId from, CellId to) const
{
    auto it = lookup_.find(edge_key(from, to));
    return it == lookup_.end() ? nullptr : &edges_[it->second];
}

std::size_t MorseGraph::invertible_count() const
{
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [](const MorseEdge& e) { return e.invertible; }));
}

Matching::Matching(std::vector<Arrow> arrows) : arrows_(std::move(arrows)) {}

bool Matching::is_matched(CellId c) const
{
    return std::any_of(arrows_.begin(), arrows_.end(), [c](const Arrow& a) { return a.from == c || a.to == c; });
}

std::vector<CellId> Matching::critical(const BasedComplex& f) const
{
    std::unordered_set<CellId> used;
    for (const auto& a : arrows_) {
        used.insert(a.from);
        used.insert(a.to);
    }
    std::vector<CellId> out;
    for (CellId c : f.cells())
        if (!used.count(c))
            out.push_back(c);
    return out;
}

std::vector<CellId> Matching::upper() const
{
    std::vector<CellId> out;
    for (const auto& a : arrows_)
        out.push_back(a.from);
    std::sort(out.begin(), out.end(), cell_less);
    return out;
}

std::vector<CellId> Matching::lower() const
{
    std::vector<CellId> out;
    for (const auto& a : arrows_)
        out.push_back(a.to);
    std::sort(out.begin(), out.end(), cell_less);
    return out;
}

bool Matching::has_stages() const
{
    return std::any_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.stage > 0; });
}

Matching Matching::canonical() const
{
    auto a = arrows_;
    std::sort(a.begin(), a.end(), [](const Arrow& x, const Arrow& y) {
        if (x.from != y.from)
            return cell_less(x.from, y.from);
        return cell_less(x.to, y.to);
    });
    return Matching(std::move(a));
}

const char* to_string(MatchingFailure f)
{
    switch (f) {
    case MatchingFailure::none:
        return "none";
    case MatchingFailure::not_an_edge:
        return "not_an_edge";
    case MatchingFailure::incidence:
        return "incidence";
    case MatchingFailure::invertibility:
        return "invertibility";
    case MatchingFailure::cycle:
        return "cycle";
    }
    return "unknown";
}

MatchingVerdict validate_matching(const MorseGraph& g, const Matching& m)
{
    const auto& f = g.complex();
    std::size_t r = f.ideal().size();
    MatchingVerdict v;
    auto fail = [&](MatchingFailure kind, std::string msg) {
        v.valid = false;
        v.failure = kind;
        v.message = std::move(msg);
        return v;
    };
    std::unordered_set<CellId> used;
    for (const auto& a : m.arrows()) {
        std::string name = cell_name(a.from, r) + " -> " + cell_name(a.to, r);
        const MorseEdge* e = g.find(a.from, a.to);
        if (!e)
            return fail(MatchingFailure::not_an_edge, name + " is not an edge of the Morse graph");
        if (!used.insert(a.from).second || !used.insert(a.to).second)
            return fail(MatchingFailure::incidence, name + " shares a cell with another arrow");
        if (!e->invertible)
            return fail(MatchingFailure::invertibility, name + " has a non-invertible coefficient");
    }

    // acyclicity of G^M by DFS colouring
    std::size_t n = f.size();
    std::vector<std::vector<std::size_t>> adj(n);
    std::unordered_set<std::uint64_t> matched;
    for (const auto& a : m.arrows())
        matched.insert(edge_key(a.from, a.to));
    for (const auto& e : g.edges()) {
        auto s = static_cast<std::size_t>(f.index_of(e.from));
        auto t = static_cast<std::size_t>(f.index_of(e.to));
        if (matched.count(edge_key(e.from, e.to)))
            adj[t].push_back(s);
        else
            adj[s].push_back(t);
    }
    std::vector<int> colour(n, 0);
    std::vector<std::size_t> parent(n, n);
    for (std::size_t root = 0; root < n; ++root) {
        if (colour[root])
            continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        colour[root] = 1;
        while (!stack.empty()) {
            auto [u, i] = stack.back();
            if (i == adj[u].size()) {
                colour[u] = 2;
                stack.pop_back();
                continue;
            }
            ++stack.back().second;
            std::size_t w = adj[u][i];
            if (colour[w] == 1) {
                std::vector<CellId> cyc;
                auto it = std::find_if(stack.begin(), stack.end(), [w](const auto& fr) { return fr.first == w; });
                for (; it != stack.end(); ++it)
                    cyc.push_back(f.cells()[it->first]);
                cyc.push_back(f.cells()[w]);
                v.cycle = cyc;
                std::string msg = "G^M has a directed cycle:";
                for (CellId c : cyc)
                    msg += " " + cell_name(c, r);
                return fail(MatchingFailure::cycle, msg);
            }
            if (!colour[w]) {
                colour[w] = 1;
                stack.push_back({w, 0});
            }
        }
    }
    return v;
}

Strategy Strategy::parse(const std::string& text)
{
    Strategy s;
    if (text == "lex")
        return s;
    if (text == "revlex") {
        s.kind = Kind::revlex;
        return s;
    }
    if (text.rfind("random:", 0) == 0 || text.rfind("random(", 0) == 0) {
        std::string digits = text.substr(7);
        if (!digits.empty() && digits.back() == ')')
            digits.pop_back();
        try {
            std::size_t used = 0;
            s.seed = std::stoull(digits, &used);
            if (used != digits.size())
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed random seed in strategy '" + text + "'");
        }
        s.kind = Kind::random;
        return s;
    }
    throw std::invalid_argument("unknown strategy '" + text + "' (lex, revlex, random:<seed>)");
}

std::string Strategy::name() const
{
    switch (kind) {
    case Kind::lex:
        return "lex";
    case Kind::revlex:
        return "revlex";
    case Kind::random:
        return "random:" + std::to_string(seed);
    }
    return "?";
}

namespace {

// Greedy fixpoint over `order` on the subgraph spanned by `nodes` and `edges`.
std::vector<const MorseEdge*> greedy_on(const std::vector<CellId>& nodes, const std::vector<const MorseEdge*>& edges,
                                        const std::vector<const MorseEdge*>& order)
{
    std::unordered_map<CellId, std::size_t> local;
    std::vector<std::size_t> initial(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k)
        initial[k] = k;
    // every edge drops one degree, so degree-descending is a valid start order
    std::stable_sort(initial.begin(), initial.end(),
                     [&](std::size_t a, std::size_t b) { return cell_degree(nodes[a]) > cell_degree(nodes[b]); });
    for (std::size_t k = 0; k < nodes.size(); ++k)
        local[nodes[k]] = k;
    DynamicTopoOrder topo(initial);
    for (const MorseEdge* e : edges)
        topo.add_edge_unchecked(local.at(e->from), local.at(e->to));

    std::vector<char> used(nodes.size(), 0);
    std::vector<const MorseEdge*> chosen;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const MorseEdge* e : order) {
            std::size_t a = local.at(e->from), b = local.at(e->to);
            if (used[a] || used[b])
                continue;
            topo.remove_edge(a, b);
            if (topo.try_add_edge(b, a)) {
                used[a] = used[b] = 1;
                chosen.push_back(e);
                changed = true;
            } else {
                topo.add_edge_unchecked(a, b);
            }
        }
    }
    return chosen;
}

// Coreduction sweep: pair a cell with its only remaining face (or a face
// with its only remaining coface); when no such pair exists, declare the
// first remaining cell critical. Acyclicity is still checked on insertion,
// and a final greedy pass makes the result inclusion-maximal.
std::vector<const MorseEdge*> coreduction_on(const std::vector<CellId>& nodes,
                                             const std::vector<const MorseEdge*>& edges)
{
    std::unordered_map<CellId, std::size_t> local;
    for (std::size_t k = 0; k < nodes.size(); ++k)
        local[nodes[k]] = k;
    std::vector<std::size_t> initial(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k)
        initial[k] = k;
    std::stable_sort(initial.begin(), initial.end(),
                     [&](std::size_t a, std::size_t b) { return cell_degree(nodes[a]) > cell_degree(nodes[b]); });
    DynamicTopoOrder topo(initial);
    std::vector<std::vector<std::pair<std::size_t, const MorseEdge*>>> faces(nodes.size()), cofaces(nodes.size());
    for (const MorseEdge* e : edges) {
        std::size_t a = local.at(e->from), b = local.at(e->to);
        topo.add_edge_unchecked(a, b);
        faces[a].push_back({b, e});
        cofaces[b].push_back({a, e});
    }
    std::vector<char> gone(nodes.size(), 0);
    std::vector<const MorseEdge*> chosen;
    auto only = [&](const std::vector<std::pair<std::size_t, const MorseEdge*>>& list)
        -> const std::pair<std::size_t, const MorseEdge*>* {
        const std::pair<std::size_t, const MorseEdge*>* hit = nullptr;
        for (const auto& x : list)
            if (!gone[x.first]) {
                if (hit)
                    return nullptr;
                hit = &x;
            }
        return hit;
    };
    std::size_t remaining = nodes.size();
    while (remaining > 0) {
        bool progress = false;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (gone[k])
                continue;
            const MorseEdge* e = nullptr;
            if (auto f = only(faces[k]))
                e = f->second;
            else if (auto c = only(cofaces[k]))
                e = c->second;
            if (!e)
                continue;
            std::size_t a = local.at(e->from), b = local.at(e->to);
            topo.remove_edge(a, b);
            if (topo.try_add_edge(b, a)) {
                chosen.push_back(e);
                gone[a] = gone[b] = 1;
                remaining -= 2;
                progress = true;
            } else {
                topo.add_edge_unchecked(a, b);
            }
        }
        if (!progress) {
            for (std::size_t k = 0; k < nodes.size(); ++k)
                if (!gone[k]) {
                    gone[k] = 1;
                    --remaining;
                    break;
                }
        }
    }
    // top up with a plain greedy pass so the result is inclusion-maximal
    std::vector<char> used(nodes.size(), 0);
    for (const MorseEdge* e : chosen)
        used[local.at(e->from)] = used[local.at(e->to)] = 1;
    for (const MorseEdge* e : edges) {
        std::size_t a = local.at(e->from), b = local.at(e->to);
        if (used[a] || used[b])
            continue;
        topo.remove_edge(a, b);
        if (topo.try_add_edge(b, a)) {
            used[a] = used[b] = 1;
            chosen.push_back(e);
        } else {
            topo.add_edge_unchecked(a, b);
        }
    }
    return chosen;
}

// Total homology rank of the constant part of F in one exact multidegree.
std::size_t block_homology(const BasedComplex& f, const std::vector<CellId>& block)
{
    std::map<int, std::vector<CellId>> by_degree;
    for (CellId c : block)
        by_degree[cell_degree(c)].push_back(c);
    std::size_t total = block.size(), twice_rank = 0;
    for (const auto& [n, src] : by_degree) {
        auto it = by_degree.find(n - 1);
        if (it == by_degree.end())
            continue;
        const auto& dst = it->second;
        Matrix m(dst.size(), src.size(), f.field());
        for (std::size_t j = 0; j < src.size(); ++j)
            for (const auto& t : f.d(src[j]).terms())
                if (t.mono.is_one()) {
                    auto pos = std::find(dst.begin(), dst.end(), t.cell);
                    if (pos != dst.end())
                        m.at(static_cast<std::size_t>(pos - dst.begin()), j) = t.coef;
                }
        twice_rank += 2 * m.rank();
    }
    return total - twice_rank;
}

} // namespace

Matching greedy_maximal_matching(const MorseGraph& g, const Strategy& strategy)
{
    const auto& f = g.complex();
    std::vector<const MorseEdge*> cand, all;
    for (const auto& e : g.edges()) {
        all.push_back(&e);
        if (e.invertible)
            cand.push_back(&e);
    }
    // edges() is already in canonical (from, to) order
    if (strategy.kind == Strategy::Kind::revlex) {
        std::reverse(cand.begin(), cand.end());
    } else if (strategy.kind == Strategy::Kind::random) {
        std::mt19937_64 rng(strategy.seed);
        std::shuffle(cand.begin(), cand.end(), rng);
    }
    auto chosen = greedy_on(f.cells(), all, cand);

    // Invertible edges join cells of equal multidegree and every other edge
    // strictly lowers it, so cycles of G^M stay inside one multidegree and the
    // blocks can be re-matched independently. An inclusion-maximal matching
    // can leave a block with more critical cells than its homology; such
    // blocks are retried with a coreduction sweep, then other orders.
    std::unordered_map<Monomial, std::vector<CellId>, MonomialHash> blocks;
    for (CellId c : f.cells())
        blocks[f.multidegree(c)].push_back(c);
    std::unordered_map<Monomial, std::vector<const MorseEdge*>, MonomialHash> block_edges, block_chosen;
    for (const MorseEdge* e : cand)
        block_edges[f.multidegree(e->from)].push_back(e);
    for (const MorseEdge* e : chosen)
        block_chosen[f.multidegree(e->from)].push_back(e);

    std::vector<Monomial> keys;
    for (const auto& [mu, edges] : block_edges)
        keys.push_back(mu);
    // deterministic visiting order
    std::sort(keys.begin(), keys.end(), [&](const Monomial& a, const Monomial& b) {
        return cell_less(blocks[a].front(), blocks[b].front());
    });
    constexpr int kRetries = 256;
    for (const auto& mu : keys) {
        const auto& nodes = blocks[mu];
        const auto& edges = block_edges[mu];
        std::size_t target = block_homology(f, nodes);
        auto& best = block_chosen[mu];
        if (nodes.size() - 2 * best.size() <= target)
            continue;
        std::mt19937_64 rng(strategy.seed ^ (mu.hash() * 0x9e3779b97f4a7c15ULL));
        for (int attempt = 0; attempt < kRetries; ++attempt) {
            std::vector<const MorseEdge*> trial;
            if (attempt == 0) {
                trial = coreduction_on(nodes, edges);
            } else {
                auto order = edges;
                if (attempt == 1)
                    std::reverse(order.begin(), order.end());
                else if (attempt > 2)
                    std::shuffle(order.begin(), order.end(), rng);
                trial = greedy_on(nodes, edges, order);
            }
            if (trial.size() > best.size())
                best = trial;
            if (nodes.size() - 2 * best.size() <= target)
                break;
        }
    }

    Matching m;
    for (const auto& mu : keys)
        for (const MorseEdge* e : block_chosen[mu])
            m.add({e->from, e->to});
    return m.canonical();
}

bool is_maximal(const MorseGraph& g, const Matching& m)
{
    std::unordered_set<CellId> used;
    for (const auto& a : m.arrows()) {
        used.insert(a.from);
        used.insert(a.to);
    }
    for (const auto& e : g.edges()) {
        if (!e.invertible || used.count(e.from) || used.count(e.to))
            continue;
        Matching ext = m;
        ext.add({e.from, e.to});
        if (validate_matching(g, ext).valid)
            return false;
    }
    return true;
}

MorseReduction::MorseReduction(ComplexPtr f, Matching m, bool check) : f_(std::move(f)), m_(std::move(m))
{
    MorseGraph g(f_);
    auto verdict = validate_matching(g, m_);
    if (!verdict.valid)
        throw std::invalid_argument("not a Morse matching: " + verdict.message);

    std::size_t n = f_->size();
    critical_ = m_.critical(*f_);
    critical_flag_.assign(n, 0);
    for (CellId c : critical_)
        critical_flag_[static_cast<std::size_t>(f_->index_of(c))] = 1;

    // partner of each lower cell and the (unit) coefficient d_{β,α}
    std::vector<int> partner(n, -1);
    std::vector<Scalar> unit(n);
    for (const auto& a : m_.arrows()) {
        auto lo = static_cast<std::size_t>(f_->index_of(a.to));
        partner[lo] = f_->index_of(a.from);
        unit[lo] = g.find(a.from, a.to)->coefficient.front().second;
    }

    phi_.assign(n, ModuleElement{});
    std::vector<char> state(n, 0);
    const std::size_t nv = f_->ideal().nvars();
    // φ(β) = c⁻¹ (α - φ(dα - cβ)) for α → β matched; 0 elsewhere
    auto compute = [&](auto&& self, std::size_t k) -> const ModuleElement& {
        if (state[k] == 2)
            return phi_[k];
        if (state[k] == 1)
            throw std::logic_error("splitting homotopy recursion is cyclic");
        state[k] = 1;
        if (partner[k] >= 0) {
            auto up = static_cast<std::size_t>(partner[k]);
            CellId alpha = f_->cells()[up];
            CellId beta = f_->cells()[k];
            Scalar cinv = unit[k].inverse();
            ElementBuilder b;
            b.add(alpha, Monomial(nv), cinv);
            for (const auto& t : f_->d(alpha).terms()) {
                if (t.cell == beta)
                    continue;
                int gi = f_->index_of(t.cell);
                if (partner[static_cast<std::size_t>(gi)] < 0)
                    continue;
                const auto& sub = self(self, static_cast<std::size_t>(gi));
                b.add(sub, -(t.coef * cinv), t.mono);
            }
            phi_[k] = b.build();
        }
        state[k] = 2;
        return phi_[k];
    };
    for (std::size_t k = 0; k < n; ++k)
        compute(compute, k);

    std::vector<ModuleElement> diff;
    for (CellId c : critical_) {
        ModuleElement dc = f_->d(c);
        diff.push_back(q(dc - f_->apply_d(phi(dc))));
    }
    morse_ = std::make_shared<BasedComplex>(f_->ideal_ptr(), f_->field(), critical_, std::move(diff), check, false);
}

bool MorseReduction::is_critical(CellId c) const
{
    int k = f_->index_of(c);
    return k >= 0 && critical_flag_[static_cast<std::size_t>(k)];
}

ModuleElement MorseReduction::phi(CellId c) const
{
    return phi_.at(static_cast<std::size_t>(f_->index_of(c)));
}

ModuleElement MorseReduction::phi(const ModuleElement& x) const
{
    ElementBuilder b;
    for (const auto& t : x.terms()) {
        const auto& ph = phi_.at(static_cast<std::size_t>(f_->index_of(t.cell)));
        if (!ph.is_zero())
            b.add(ph, t.coef, t.mono);
    }
    return b.build();
}

ModuleElement MorseReduction::p(const ModuleElement& x) const
{
    return x - f_->apply_d(phi(x)) - phi(f_->apply_d(x));
}

ModuleElement MorseReduction::p(CellId c) const
{
    return p(ModuleElement::basis(c, f_->field(), f_->ideal().nvars()));
}

ModuleElement MorseReduction::q(const ModuleElement& x) const
{
    ElementBuilder b;
    for (const auto& t : x.terms())
        if (is_critical(t.cell))
            b.add(t.cell, t.mono, t.coef);
    return b.build();
}

} // namespace golodkit
