#include "golodkit/simplicial.hpp"

#include "golodkit/linalg.hpp"
#include "golodkit/simd/exponent_kernels.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace golodkit {

SimplicialComplex::SimplicialComplex(std::size_t r, std::vector<CellId> faces) : r_(r), faces_(std::move(faces))
{
    if (r >= 32)
        throw std::invalid_argument("simplicial complex on too many vertices");
    std::sort(faces_.begin(), faces_.end(), cell_less);
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    std::unordered_set<CellId> set(faces_.begin(), faces_.end());
    for (CellId f : faces_) {
        if (r_ < 32 && (f >> r_) != 0)
            throw std::invalid_argument("face uses a vertex beyond r");
        for (CellId rest = f; rest; rest &= rest - 1) {
            CellId sub = f & ~(rest & (~rest + 1));
            if (!set.count(sub))
                throw std::invalid_argument("face set is not downward closed");
        }
    }
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t r, const std::vector<CellId>& facets)
{
    std::unordered_set<CellId> all;
    for (CellId f : facets) {
        // enumerate all subsets of f
        CellId s = f;
        while (true) {
            all.insert(s);
            if (s == 0)
                break;
            s = (s - 1) & f;
        }
    }
    return SimplicialComplex(r, std::vector<CellId>(all.begin(), all.end()));
}

SimplicialComplex SimplicialComplex::full_simplex(std::size_t r)
{
    std::vector<CellId> faces;
    for (CellId s = 0; s < (CellId{1} << r); ++s)
        faces.push_back(s);
    return SimplicialComplex(r, std::move(faces));
}

bool SimplicialComplex::contains(CellId f) const
{
    return std::binary_search(faces_.begin(), faces_.end(), f, cell_less);
}

int SimplicialComplex::dimension() const
{
    return faces_.empty() ? -2 : cell_degree(faces_.back()) - 1;
}

std::vector<CellId> SimplicialComplex::facets() const
{
    std::vector<CellId> out;
    for (CellId f : faces_) {
        bool maximal = true;
        for (std::size_t v = 0; v < r_ && maximal; ++v) {
            CellId bit = CellId{1} << v;
            if (!(f & bit) && contains(f | bit))
                maximal = false;
        }
        if (maximal)
            out.push_back(f);
    }
    return out;
}

SimplicialComplex restrict_to(const SimplicialComplex& delta, const MonomialIdeal& ideal, const Monomial& mu)
{
    std::vector<CellId> kept;
    for (CellId f : delta.faces())
        if (divides(ideal.multidegree(f), mu))
            kept.push_back(f);
    return SimplicialComplex(delta.vertex_count(), std::move(kept));
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& delta, Field field)
{
    if (delta.is_void())
        return {};
    int top = delta.dimension();
    std::size_t levels = static_cast<std::size_t>(top + 2); // degrees -1..top
    std::vector<std::vector<CellId>> by_level(levels);
    for (CellId f : delta.faces())
        by_level[static_cast<std::size_t>(cell_degree(f))].push_back(f);
    std::vector<std::size_t> dims(levels), rank_of(levels, 0);
    for (std::size_t i = 0; i < levels; ++i)
        dims[i] = by_level[i].size();
    for (std::size_t i = 1; i < levels; ++i) {
        const auto& rows = by_level[i - 1];
        const auto& cols = by_level[i];
        std::unordered_map<CellId, std::size_t> row_of;
        for (std::size_t k = 0; k < rows.size(); ++k)
            row_of[rows[k]] = k;
        Matrix m(rows.size(), cols.size(), field);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            int pos = 0;
            for (CellId rest = cols[c]; rest; rest &= rest - 1, ++pos) {
                CellId bit = rest & (~rest + 1);
                m.at(row_of.at(cols[c] & ~bit), c) = Scalar(field, pos % 2 ? -1 : 1);
            }
        }
        rank_of[i] = m.rank();
    }
    return homology_from_ranks(dims, rank_of);
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal)
{
    std::size_t r = ideal.size();
    if (r > max_generators())
        throw CapExceeded(r, max_generators());
    std::size_t stride = simd::padded_length(ideal.nvars());
    std::vector<std::uint32_t> rows(r * stride);
    for (std::size_t j = 0; j < r; ++j)
        std::copy_n(ideal.generator(j).lanes(), stride, rows.begin() + static_cast<std::ptrdiff_t>(j * stride));
    std::vector<std::uint32_t> table((std::size_t{1} << r) * stride);
    simd::subset_lcm_table(simd::active_kernels(), rows.data(), r, stride, table.data());

    std::unordered_set<Monomial, MonomialHash> seen;
    std::vector<Monomial> out;
    for (std::size_t s = 1; s < (std::size_t{1} << r); ++s) {
        Monomial m(ideal.nvars());
        for (std::size_t v = 0; v < ideal.nvars(); ++v)
            m.set(v, table[s * stride + v]);
        if (seen.insert(m).second)
            out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        return lex_greater(a, b);
    });
    return out;
}

ResolutionVerdict is_resolution(const SimplicialComplex& delta, const MonomialIdeal& ideal, Field field)
{
    if (delta.vertex_count() != ideal.size())
        throw std::invalid_argument("complex and ideal disagree on the number of generators");
    ResolutionVerdict v;
    for (const auto& mu : lcm_lattice(ideal)) {
        auto sub = restrict_to(delta, ideal, mu);
        if (sub.is_void())
            continue;
        auto h = reduced_homology_ranks(sub, field);
        for (std::size_t k = 0; k < h.size(); ++k) {
            if (h[k]) {
                v.is_resolution = false;
                v.witness = mu;
                v.witness_degree = static_cast<int>(k) - 1;
                return v;
            }
        }
    }
    return v;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& delta)
{
    std::size_t m = delta.vertex_count();
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < m; ++i)
        vars.push_back("x" + std::to_string(i + 1));
    std::vector<CellId> nonfaces;
    for (CellId s = 1; s < (CellId{1} << m); ++s) {
        if (delta.contains(s))
            continue;
        bool minimal = true;
        for (CellId rest = s; rest && minimal; rest &= rest - 1)
            minimal = delta.contains(s & ~(rest & (~rest + 1)));
        if (minimal)
            nonfaces.push_back(s);
    }
    if (nonfaces.empty())
        throw std::invalid_argument("every subset is a face: the Stanley-Reisner ideal is zero");
    std::sort(nonfaces.begin(), nonfaces.end(), cell_less);
    std::vector<Monomial> gens;
    for (CellId s : nonfaces) {
        Monomial g(m);
        for (int v : cell_indices(s))
            g.set(static_cast<std::size_t>(v), 1);
        gens.push_back(g);
    }
    return minimalize(vars, gens).ideal;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal)
{
    std::size_t m = ideal.nvars();
    if (m >= 32)
        throw std::invalid_argument("too many variables for a vertex bitmask");
    std::vector<CellId> nonfaces;
    for (const auto& g : ideal.generators()) {
        CellId s = 0;
        for (std::size_t v = 0; v < m; ++v) {
            if (g[v] > 1)
                throw std::invalid_argument("ideal is not square-free");
            if (g[v])
                s |= CellId{1} << v;
        }
        nonfaces.push_back(s);
    }
    std::vector<CellId> faces;
    for (CellId s = 0; s < (CellId{1} << m); ++s) {
        bool face = std::none_of(nonfaces.begin(), nonfaces.end(), [&](CellId n) { return (n & s) == n; });
        if (face)
            faces.push_back(s);
    }
    return SimplicialComplex(m, std::move(faces));
}

} // namespace golodkit
