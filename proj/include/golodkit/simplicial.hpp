#pragma once

#include "golodkit/monomial.hpp"
#include "golodkit/scalar.hpp"

#include <optional>
#include <vector>

namespace golodkit {

/// Downward-closed family of subsets of {1..r}. The void complex (no faces
/// at all) is distinct from {∅}.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Faces must already be downward closed; throws std::invalid_argument otherwise.
    SimplicialComplex(std::size_t r, std::vector<CellId> faces);

    static SimplicialComplex from_facets(std::size_t r, const std::vector<CellId>& facets);
    static SimplicialComplex full_simplex(std::size_t r);

    std::size_t vertex_count() const { return r_; }
    const std::vector<CellId>& faces() const { return faces_; }
    bool is_void() const { return faces_.empty(); }
    bool contains(CellId f) const;
    /// -1 for {∅}; -2 for the void complex.
    int dimension() const;
    std::vector<CellId> facets() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::size_t r_ = 0;
    std::vector<CellId> faces_; // canonical order
};

/// Faces J with m_J dividing mu.
SimplicialComplex restrict_to(const SimplicialComplex& delta, const MonomialIdeal& ideal, const Monomial& mu);

/// Reduced homology ranks in degrees -1..dim; entry k is degree k-1.
/// Empty for the void complex. {∅} gives [1].
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& delta, Field field);

/// Distinct lcms of nonempty generator subsets, ordered by total degree then lex.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal);

struct ResolutionVerdict {
    bool is_resolution = true;
    std::optional<Monomial> witness;
    int witness_degree = 0; // degree of nonvanishing reduced homology
};

ResolutionVerdict is_resolution(const SimplicialComplex& delta, const MonomialIdeal& ideal,
                                Field field = Field::rationals());

/// Minimal non-faces as square-free monomials in variables x1..xm, m = vertex count.
/// Throws std::invalid_argument when every subset is a face (zero ideal).
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& delta);
/// Inverse; throws std::invalid_argument for a non-square-free ideal.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

} // namespace golodkit
