#pragma once

#include "golodkit/morse.hpp"

#include <boost/container_hash/hash.hpp>

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace golodkit {

using CellTuple = std::vector<CellId>;

struct CellTupleHash {
    std::size_t operator()(const CellTuple& t) const { return boost::hash_range(t.begin(), t.end()); }
};

/// Transferred A∞ structure of the Taylor dga along a Morse reduction.
///
/// λ₂ is the Taylor product and, for n ≥ 3,
///   λₙ = Σ_{s+t=n} (-1)^{s+1} λ₂(g_s ⊗ g_t),  g₁ = id, g_k = hλ_k,
/// where g_s ⊗ g_t picks up the Koszul sign (-1)^{(t-1)(|x₁|+…+|x_s|)}.
/// The homotopy is h = -φ, so that ip - 1 = dh + hd; with h = φ the
/// Stasheff identities fail in odd characteristic.
/// μₙ = p λₙ on im(p) and νₙ = q μₙ (p ⊗ … ⊗ p) on the Morse complex.
///
/// Strict unit: μₙ, νₙ with a degree-0 input are 0 for n ≥ 3.
///
/// Memo tables are filled lazily, so an instance is not safe for
/// concurrent use.
class MerkulovTransfer {
public:
    /// The reduction must be of a Taylor complex.
    explicit MerkulovTransfer(std::shared_ptr<const MorseReduction> reduction);

    const MorseReduction& reduction() const { return *red_; }
    const BasedComplex& taylor() const { return red_->complex(); }

    const ModuleElement& lambda(const CellTuple& cells) const;
    ModuleElement lambda(const std::vector<ModuleElement>& xs) const;

    /// μ₁ = d; arguments are expected to lie in im(p).
    ModuleElement mu(const std::vector<ModuleElement>& xs) const;
    /// μₙ(p c₁, …, p cₙ) for critical cells cᵢ.
    ModuleElement mu_critical(const CellTuple& critical) const;
    /// νₙ on critical cells; ν₁ = d̃.
    ModuleElement nu(const CellTuple& critical) const;
    /// q λₙ(c₁, …, cₙ); agrees with nu() when the critical cells are
    /// downward closed.
    ModuleElement nu_short(const CellTuple& critical) const;
    bool critical_downward_closed() const { return downward_closed_; }

    /// Nonempty critical cells in canonical order.
    const std::vector<CellId>& basis() const { return basis_; }

    std::size_t memo_size() const { return lambda_memo_.size(); }

private:
    ModuleElement compute_lambda(const CellTuple& cells) const;
    const ModuleElement& g(const CellTuple& cells) const;
    ModuleElement multilinear(const std::vector<ModuleElement>& xs, bool apply_p) const;

    std::shared_ptr<const MorseReduction> red_;
    std::vector<CellId> basis_;
    std::vector<ModuleElement> p_of_; // p(c) by complex index, filled for critical cells
    bool downward_closed_ = false;
    mutable std::unordered_map<CellTuple, ModuleElement, CellTupleHash> lambda_memo_;
    mutable std::unordered_map<CellTuple, ModuleElement, CellTupleHash> g_memo_;
};

struct ArityVerdict {
    int arity = 0;
    bool minimal = true;
    CellTuple offender;      // first tuple whose νₙ has a unit coefficient
    ModuleElement value;     // νₙ(offender)
    CellId unit_cell = 0;    // first cell carrying a unit coefficient
    std::size_t evaluated = 0;
};

/// Minimality of νₙ over all n-tuples of nonempty critical cells. A unit
/// coefficient needs pairwise coprime input multidegrees and a critical
/// cell of degree Σ|cᵢ| + n - 2 and multidegree Π m_{cᵢ}; other tuples are
/// skipped without evaluation.
ArityVerdict check_arity_minimal(const MerkulovTransfer& t, int n);

struct AInfTable {
    int arity = 0;
    bool morse_coordinates = false; // νₙ values instead of μₙ values
    std::vector<CellId> basis;
    std::vector<std::pair<CellTuple, ModuleElement>> entries; // every tuple, zeros included
};

/// All n-tuples over `basis` (defaults to the nonempty critical cells).
AInfTable materialize(const MerkulovTransfer& t, int n, bool morse_coordinates,
                      std::optional<std::vector<CellId>> basis = std::nullopt);

struct StasheffVerdict {
    bool holds = true;
    int arity = 0;
    CellTuple inputs;
    ModuleElement residual;
    std::size_t evaluated = 0;
};

/// Σ_{r+s+t=n} (-1)^{r+st} μ_{r+1+t}(1^r ⊗ μ_s ⊗ 1^t) = 0 on p-images of
/// critical cells, for every total arity n ≤ max_arity.
StasheffVerdict verify_stasheff(const MerkulovTransfer& t, int max_arity);

/// Every term c·m·u_J of `out` has m_J | lcm(inputs) and m·m_J = Π inputs.
bool multidegree_consistent(const BasedComplex& f, const std::vector<Monomial>& inputs, const ModuleElement& out);

} // namespace golodkit
