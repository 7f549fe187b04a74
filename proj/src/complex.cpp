#include "golodkit/complex.hpp"

#include "golodkit/ideal_io.hpp"
#include "golodkit/linalg.hpp"
#include "golodkit/simd/exponent_kernels.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace golodkit {

BasedComplex::BasedComplex(std::shared_ptr<const MonomialIdeal> ideal, Field field, std::vector<CellId> cells,
                           std::vector<ModuleElement> differential, bool check, bool taylor)
    : ideal_(std::move(ideal)), field_(field), taylor_(taylor)
{
    if (!ideal_)
        throw std::invalid_argument("complex needs an ideal");
    if (cells.size() != differential.size())
        throw std::invalid_argument("one differential entry per cell required");
    std::size_t r = ideal_->size();
    index_.assign(std::size_t{1} << r, -1);

    std::vector<std::size_t> order(cells.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cell_less(cells[a], cells[b]); });
    cells_.reserve(cells.size());
    diff_.reserve(cells.size());
    for (std::size_t k : order) {
        CellId c = cells[k];
        if ((c >> r) != 0)
            throw std::invalid_argument("cell refers to a generator beyond r");
        if (index_[c] >= 0)
            throw std::invalid_argument("duplicate cell " + cell_name(c, r));
        index_[c] = static_cast<int>(cells_.size());
        cells_.push_back(c);
        diff_.push_back(std::move(differential[k]));
        mdeg_.push_back(ideal_->multidegree(c));
    }
    for (std::size_t k = 0; k < cells_.size(); ++k)
        for (const auto& t : diff_[k].terms())
            if (index_of(t.cell) < 0)
                throw std::invalid_argument("differential of " + cell_name(cells_[k], r) + " leaves the complex");
    if (check) {
        check_homogeneous();
        check_d_squared();
    }
}

int BasedComplex::index_of(CellId c) const
{
    return c < index_.size() ? index_[c] : -1;
}

const Monomial& BasedComplex::multidegree(CellId c) const
{
    int k = index_of(c);
    if (k < 0)
        throw std::out_of_range("cell " + cell_name(c, ideal_->size()) + " is not in the complex");
    return mdeg_[static_cast<std::size_t>(k)];
}

const ModuleElement& BasedComplex::d(CellId c) const
{
    int k = index_of(c);
    if (k < 0)
        throw std::out_of_range("cell " + cell_name(c, ideal_->size()) + " is not in the complex");
    return diff_[static_cast<std::size_t>(k)];
}

ModuleElement BasedComplex::apply_d(const ModuleElement& x) const
{
    ElementBuilder b;
    for (const auto& t : x.terms())
        b.add(d(t.cell), t.coef, t.mono);
    return b.build();
}

int BasedComplex::max_degree() const
{
    return cells_.empty() ? -1 : cell_degree(cells_.back());
}

std::vector<CellId> BasedComplex::cells_in_degree(int n) const
{
    std::vector<CellId> out;
    for (CellId c : cells_)
        if (cell_degree(c) == n)
            out.push_back(c);
    return out;
}

std::vector<std::size_t> BasedComplex::rank_vector() const
{
    std::vector<std::size_t> out(static_cast<std::size_t>(max_degree() + 1), 0);
    for (CellId c : cells_)
        ++out[static_cast<std::size_t>(cell_degree(c))];
    return out;
}

void BasedComplex::check_d_squared() const
{
    for (CellId c : cells_) {
        auto dd = apply_d(d(c));
        if (!dd.is_zero())
            throw std::logic_error("d∘d is nonzero on " + cell_name(c, ideal_->size()) + ": " +
                                   dd.to_string(ideal_->vars(), ideal_->size()));
    }
}

void BasedComplex::check_homogeneous() const
{
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        for (const auto& t : diff_[k].terms()) {
            if (cell_degree(t.cell) + 1 != cell_degree(cells_[k]))
                throw std::logic_error("differential does not lower degree by one at " +
                                       cell_name(cells_[k], ideal_->size()));
            if (!(t.mono * multidegree(t.cell) == mdeg_[k]))
                throw std::logic_error("differential is not multigraded at " + cell_name(cells_[k], ideal_->size()));
        }
    }
}

bool operator==(const BasedComplex& a, const BasedComplex& b)
{
    return *a.ideal_ == *b.ideal_ && a.field_ == b.field_ && a.cells_ == b.cells_ && a.diff_ == b.diff_;
}

namespace {

// d(u_J) on the Taylor/F_Δ formula, reusing precomputed multidegrees.
ModuleElement simplicial_boundary(CellId J, const MonomialIdeal& ideal, Field field,
                                  const std::vector<Monomial>* table)
{
    auto md = [&](CellId s) { return table ? (*table)[s] : ideal.multidegree(s); };
    Monomial mJ = md(J);
    ElementBuilder b;
    int pos = 0;
    for (CellId rest = J; rest; rest &= rest - 1, ++pos) {
        CellId face = J & ~(rest & (~rest + 1));
        b.add(face, mJ / md(face), Scalar(field, pos % 2 ? -1 : 1));
    }
    return b.build();
}

} // namespace

ComplexPtr simplicial_to_complex(const SimplicialComplex& delta, std::shared_ptr<const MonomialIdeal> ideal,
                                 Field field, bool check)
{
    if (delta.vertex_count() != ideal->size())
        throw std::invalid_argument("complex and ideal disagree on the number of generators");
    std::vector<CellId> cells = delta.faces();
    std::vector<ModuleElement> diff;
    diff.reserve(cells.size());
    for (CellId J : cells)
        diff.push_back(simplicial_boundary(J, *ideal, field, nullptr));
    return std::make_shared<BasedComplex>(ideal, field, std::move(cells), std::move(diff), check, false);
}

ComplexPtr taylor(std::shared_ptr<const MonomialIdeal> ideal, Field field, bool check)
{
    std::size_t r = ideal->size();
    if (r > max_generators())
        throw CapExceeded(r, max_generators());
    std::size_t stride = simd::padded_length(ideal->nvars());
    std::vector<std::uint32_t> rows(r * stride);
    for (std::size_t j = 0; j < r; ++j)
        std::copy_n(ideal->generator(j).lanes(), stride, rows.begin() + static_cast<std::ptrdiff_t>(j * stride));
    std::vector<std::uint32_t> lanes((std::size_t{1} << r) * stride);
    simd::subset_lcm_table(simd::active_kernels(), rows.data(), r, stride, lanes.data());
    std::vector<Monomial> table(std::size_t{1} << r, Monomial(ideal->nvars()));
    for (std::size_t s = 0; s < table.size(); ++s)
        for (std::size_t v = 0; v < ideal->nvars(); ++v)
            table[s].set(v, lanes[s * stride + v]);

    std::vector<CellId> cells;
    std::vector<ModuleElement> diff;
    for (CellId J = 0; J < (CellId{1} << r); ++J) {
        cells.push_back(J);
        diff.push_back(simplicial_boundary(J, *ideal, field, &table));
    }
    return std::make_shared<BasedComplex>(ideal, field, std::move(cells), std::move(diff), check, true);
}

ModuleElement taylor_product(const MonomialIdeal& ideal, Field field, CellId I, CellId J)
{
    if (I & J)
        return {};
    // sign of the shuffle: pairs (i in I, j in J) with i > j
    int inversions = 0;
    for (CellId rest = J; rest; rest &= rest - 1) {
        CellId bit = rest & (~rest + 1);
        inversions += __builtin_popcount(I & ~((bit << 1) - 1));
    }
    Monomial coef = ideal.multidegree(I) * ideal.multidegree(J) / ideal.multidegree(I | J);
    return ModuleElement::monomial_term(I | J, coef, Scalar(field, inversions % 2 ? -1 : 1));
}

ModuleElement taylor_multiply(const MonomialIdeal& ideal, Field field, const ModuleElement& x, const ModuleElement& y)
{
    ElementBuilder b;
    for (const auto& s : x.terms())
        for (const auto& t : y.terms()) {
            if (s.cell & t.cell)
                continue;
            auto prod = taylor_product(ideal, field, s.cell, t.cell);
            b.add(prod, s.coef * t.coef, s.mono * t.mono);
        }
    return b.build();
}

ModuleElement taylor_multiply(const BasedComplex& t, const ModuleElement& x, const ModuleElement& y)
{
    if (!t.is_taylor())
        throw std::invalid_argument("taylor_multiply needs the Taylor complex");
    Field field = t.field();
    ElementBuilder b;
    for (const auto& s : x.terms())
        for (const auto& u : y.terms()) {
            if (s.cell & u.cell)
                continue;
            int inversions = 0;
            for (CellId rest = u.cell; rest; rest &= rest - 1) {
                CellId bit = rest & (~rest + 1);
                inversions += __builtin_popcount(s.cell & ~((bit << 1) - 1));
            }
            Monomial coef = t.multidegree(s.cell) * t.multidegree(u.cell) / t.multidegree(s.cell | u.cell);
            Scalar sign(field, inversions % 2 ? -1 : 1);
            b.add(s.cell | u.cell, coef * s.mono * u.mono, sign * s.coef * u.coef);
        }
    return b.build();
}

MinimalityReport is_minimal(const BasedComplex& f)
{
    MinimalityReport rep;
    for (CellId c : f.cells())
        for (const auto& t : f.d(c).terms())
            if (t.mono.is_one()) {
                rep.minimal = false;
                rep.offenders.emplace_back(c, t.cell);
            }
    return rep;
}

namespace {

// Homology of the scalar subcomplex spanned by `cells` using only the
// constant parts of d (i.e. F ⊗ k restricted to those cells), by degree.
std::vector<std::size_t> constant_part_homology(const BasedComplex& f, const std::vector<CellId>& cells,
                                                bool constant_only)
{
    int top = -1;
    for (CellId c : cells)
        top = std::max(top, cell_degree(c));
    if (top < 0)
        return {};
    std::vector<std::vector<CellId>> by_deg(static_cast<std::size_t>(top + 1));
    for (CellId c : cells)
        by_deg[static_cast<std::size_t>(cell_degree(c))].push_back(c);
    std::vector<std::size_t> dims(by_deg.size()), rank_of(by_deg.size(), 0);
    for (std::size_t n = 0; n < by_deg.size(); ++n)
        dims[n] = by_deg[n].size();
    for (std::size_t n = 1; n < by_deg.size(); ++n) {
        const auto& rows = by_deg[n - 1];
        const auto& cols = by_deg[n];
        if (rows.empty() || cols.empty())
            continue;
        std::unordered_map<CellId, std::size_t> row_of;
        for (std::size_t k = 0; k < rows.size(); ++k)
            row_of[rows[k]] = k;
        Matrix m(rows.size(), cols.size(), f.field());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (const auto& t : f.d(cols[c]).terms()) {
                auto it = row_of.find(t.cell);
                if (it == row_of.end())
                    continue;
                // In a multidegree strand every coefficient monomial maps the
                // source component isomorphically onto the target one.
                if (constant_only && !t.mono.is_one())
                    continue;
                m.at(it->second, c) += t.coef;
            }
        }
        rank_of[n] = m.rank();
    }
    return homology_from_ranks(dims, rank_of);
}

} // namespace

std::vector<std::size_t> tor_ranks(const BasedComplex& f)
{
    auto h = constant_part_homology(f, f.cells(), true);
    while (!h.empty() && h.back() == 0)
        h.pop_back();
    return h;
}

std::vector<MultigradedRank> tor_table(const BasedComplex& f)
{
    // F ⊗ k splits by multidegree: constant entries only join equal multidegrees.
    std::vector<Monomial> keys;
    std::unordered_map<Monomial, std::vector<CellId>, MonomialHash> groups;
    for (CellId c : f.cells()) {
        auto [it, fresh] = groups.try_emplace(f.multidegree(c));
        if (fresh)
            keys.push_back(f.multidegree(c));
        it->second.push_back(c);
    }
    std::vector<MultigradedRank> out;
    for (const auto& mu : keys) {
        auto h = constant_part_homology(f, groups[mu], true);
        for (std::size_t n = 0; n < h.size(); ++n)
            if (h[n])
                out.push_back({static_cast<int>(n), mu, h[n]});
    }
    std::sort(out.begin(), out.end(), [](const MultigradedRank& a, const MultigradedRank& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        if (a.multidegree.total_degree() != b.multidegree.total_degree())
            return a.multidegree.total_degree() < b.multidegree.total_degree();
        return lex_greater(a.multidegree, b.multidegree);
    });
    return out;
}

std::vector<CellId> multigraded_basis(const BasedComplex& f, const Monomial& mu)
{
    std::vector<CellId> out;
    for (CellId c : f.cells())
        if (f.multidegree(c) == mu)
            out.push_back(c);
    return out;
}

std::vector<std::size_t> strand_homology(const BasedComplex& f, const Monomial& mu)
{
    std::vector<CellId> cells;
    for (CellId c : f.cells())
        if (divides(f.multidegree(c), mu))
            cells.push_back(c);
    auto h = constant_part_homology(f, cells, false);
    h.resize(static_cast<std::size_t>(std::max(f.max_degree() + 1, 0)), 0);
    return h;
}

std::vector<LatticeNode> lcm_lattice_with_covers(const MonomialIdeal& ideal)
{
    std::vector<LatticeNode> nodes;
    nodes.push_back({Monomial(ideal.nvars()), {}});
    for (auto& m : lcm_lattice(ideal))
        nodes.push_back({std::move(m), {}});
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        for (std::size_t b = 0; b < nodes.size(); ++b) {
            if (a == b || !divides(nodes[b].mu, nodes[a].mu))
                continue;
            bool cover = true;
            for (std::size_t c = 0; c < nodes.size() && cover; ++c)
                if (c != a && c != b && divides(nodes[b].mu, nodes[c].mu) && divides(nodes[c].mu, nodes[a].mu))
                    cover = false;
            if (cover)
                nodes[a].covers.push_back(b);
        }
    }
    return nodes;
}

nlohmann::json complex_to_json(const BasedComplex& f)
{
    const auto& I = f.ideal();
    nlohmann::json cells = nlohmann::json::array();
    nlohmann::json diff = nlohmann::json::array();
    for (CellId c : f.cells()) {
        std::vector<int> subset;
        for (int j : cell_indices(c))
            subset.push_back(j + 1);
        cells.push_back({{"name", cell_name(c, I.size())},
                         {"subset", subset},
                         {"degree", cell_degree(c)},
                         {"multidegree", f.multidegree(c).exponents()}});
        for (CellId t : f.d(c).support()) {
            nlohmann::json poly = nlohmann::json::array();
            Polynomial p = f.d(c).coefficient(t);
            for (const auto& [m, s] : p)
                poly.push_back({{"coef", s.to_string()}, {"exponents", m.exponents()}});
            diff.push_back({{"source", cell_name(c, I.size())},
                            {"target", cell_name(t, I.size())},
                            {"polynomial", poly},
                            {"text", polynomial_to_string(p, I.vars())}});
        }
    }
    return {{"schema", "golodkit.complex/1"},
            {"field", f.field().name()},
            {"taylor", f.is_taylor()},
            {"ideal", ideal_to_json(I)},
            {"cells", cells},
            {"differential", diff}};
}

ComplexPtr complex_from_json(const nlohmann::json& j, bool check)
{
    if (j.value("schema", "") != "golodkit.complex/1")
        throw std::invalid_argument("unsupported complex schema");
    std::string fname = j.at("field").get<std::string>();
    Field field = fname == "QQ" ? Field::rationals() : Field::prime(static_cast<std::uint32_t>(std::stoul(fname.substr(1))));
    auto src = parse_ideal_json(j.at("ideal").dump());
    auto ideal = std::make_shared<const MonomialIdeal>(src.vars, src.generators);
    std::map<std::string, CellId> by_name;
    std::vector<CellId> cells;
    for (const auto& c : j.at("cells")) {
        std::vector<int> idx;
        for (int v : c.at("subset").get<std::vector<int>>())
            idx.push_back(v - 1);
        CellId id = cell_from_indices(idx);
        by_name[c.at("name").get<std::string>()] = id;
        cells.push_back(id);
    }
    std::map<CellId, ElementBuilder> builders;
    for (const auto& e : j.at("differential")) {
        CellId s = by_name.at(e.at("source").get<std::string>());
        CellId t = by_name.at(e.at("target").get<std::string>());
        for (const auto& term : e.at("polynomial"))
            builders[s].add(t, Monomial(term.at("exponents").get<std::vector<std::uint32_t>>()),
                            Scalar::parse(field, term.at("coef").get<std::string>()));
    }
    std::vector<ModuleElement> diff;
    for (CellId c : cells)
        diff.push_back(builders.count(c) ? builders[c].build() : ModuleElement{});
    return std::make_shared<BasedComplex>(ideal, field, std::move(cells), std::move(diff), check,
                                          j.value("taylor", false));
}

std::string betti_csv(const std::vector<std::size_t>& ranks)
{
    std::string out = "degree,rank\n";
    for (std::size_t n = 0; n < ranks.size(); ++n)
        out += std::to_string(n) + "," + std::to_string(ranks[n]) + "\n";
    return out;
}

} // namespace golodkit
