#pragma once

#include "golodkit/module_element.hpp"
#include "golodkit/monomial.hpp"
#include "golodkit/scalar.hpp"
#include "golodkit/simplicial.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <vector>

namespace golodkit {

/// Free multigraded complex with one basis cell per generator subset it
/// contains. Cells of Taylor-derived complexes keep their subset id, so a
/// cell's multidegree is always the lcm of its generators.
class BasedComplex {
public:
    /// `differential[k]` is d of `cells[k]`. When `check` is set, d∘d = 0 and
    /// multigraded homogeneity are verified (std::logic_error on failure).
    BasedComplex(std::shared_ptr<const MonomialIdeal> ideal, Field field, std::vector<CellId> cells,
                 std::vector<ModuleElement> differential, bool check = true, bool taylor = false);

    const MonomialIdeal& ideal() const { return *ideal_; }
    std::shared_ptr<const MonomialIdeal> ideal_ptr() const { return ideal_; }
    Field field() const { return field_; }
    bool is_taylor() const { return taylor_; }

    std::size_t size() const { return cells_.size(); }
    /// Canonical cell order (cell_less).
    const std::vector<CellId>& cells() const { return cells_; }
    int index_of(CellId c) const;
    bool contains(CellId c) const { return index_of(c) >= 0; }
    const Monomial& multidegree(CellId c) const;
    const ModuleElement& d(CellId c) const;

    /// S-linear extension of d.
    ModuleElement apply_d(const ModuleElement& x) const;

    int max_degree() const;
    std::vector<CellId> cells_in_degree(int n) const;
    /// Cell counts per homological degree 0..max_degree.
    std::vector<std::size_t> rank_vector() const;

    /// Throws std::logic_error naming a cell whose d∘d is nonzero.
    void check_d_squared() const;
    void check_homogeneous() const;

    friend bool operator==(const BasedComplex& a, const BasedComplex& b);

private:
    std::shared_ptr<const MonomialIdeal> ideal_;
    Field field_;
    std::vector<CellId> cells_;
    std::vector<ModuleElement> diff_;
    std::vector<Monomial> mdeg_;
    std::vector<int> index_; // size 2^r, -1 when absent
    bool taylor_ = false;
};

using ComplexPtr = std::shared_ptr<const BasedComplex>;

/// F_Δ with d(u_J) = Σ (-1)^{i+1} (m_J / m_{J^i}) u_{J^i}.
ComplexPtr simplicial_to_complex(const SimplicialComplex& delta, std::shared_ptr<const MonomialIdeal> ideal,
                                 Field field, bool check = true);

/// F_Δ for the full simplex; throws CapExceeded above max_generators().
ComplexPtr taylor(std::shared_ptr<const MonomialIdeal> ideal, Field field, bool check = true);

/// u_I · u_J in the Taylor dga: sgn(I,J) (m_I m_J / m_{I∪J}) u_{I∪J}, zero if I ∩ J ≠ ∅.
ModuleElement taylor_product(const MonomialIdeal& ideal, Field field, CellId I, CellId J);
/// Bilinear extension to elements.
ModuleElement taylor_multiply(const MonomialIdeal& ideal, Field field, const ModuleElement& x,
                              const ModuleElement& y);
/// Same, reading multidegrees from a Taylor complex's cache.
ModuleElement taylor_multiply(const BasedComplex& t, const ModuleElement& x, const ModuleElement& y);

struct MinimalityReport {
    bool minimal = true;
    // (source, target) of each component with a unit coefficient
    std::vector<std::pair<CellId, CellId>> offenders;
};
MinimalityReport is_minimal(const BasedComplex& f);

/// Betti numbers: homology of F ⊗ k, trailing zeros removed.
std::vector<std::size_t> tor_ranks(const BasedComplex& f);

struct MultigradedRank {
    int degree;
    Monomial multidegree;
    std::size_t rank;
};
/// Nonzero multigraded Tor ranks, ordered by degree then multidegree.
std::vector<MultigradedRank> tor_table(const BasedComplex& f);

/// Cells whose multidegree equals mu exactly.
std::vector<CellId> multigraded_basis(const BasedComplex& f, const Monomial& mu);

/// Homology ranks, degrees 0..max_degree, of the k-linear strand of F in
/// multidegree mu (cells with m_J dividing mu).
std::vector<std::size_t> strand_homology(const BasedComplex& f, const Monomial& mu);

struct LatticeNode {
    Monomial mu;
    std::vector<std::size_t> covers; // indices of elements covered by this one
};
/// Lcm lattice including the bottom element 1, with cover relations.
std::vector<LatticeNode> lcm_lattice_with_covers(const MonomialIdeal& ideal);

nlohmann::json complex_to_json(const BasedComplex& f);
ComplexPtr complex_from_json(const nlohmann::json& j, bool check = true);
std::string betti_csv(const std::vector<std::size_t>& ranks);

} // namespace golodkit
