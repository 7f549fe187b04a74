#pragma once

#include "golodkit/ainf.hpp"
#include "golodkit/jollenbeck.hpp"
#include "golodkit/morse.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace golodkit {

struct PairVerdict {
    bool holds = true;
    std::size_t first = 0, second = 0; // 0-based generator indices of the witness pair
};

/// Every coprime pair of generators has a third generator dividing its lcm.
PairVerdict gcd_condition(const MonomialIdeal& ideal);

struct StronglyGenericVerdict {
    bool holds = true;
    std::size_t variable = 0;
    std::size_t first = 0, second = 0;
};
/// No variable has the same nonzero exponent in two generators.
StronglyGenericVerdict is_strongly_generic(const MonomialIdeal& ideal);

/// Whenever m_i, m_j share a positive exponent in some variable, a third
/// generator m_k divides lcm(m_i, m_j) with supp(lcm / m_k) = supp(lcm).
PairVerdict is_generic(const MonomialIdeal& ideal);

struct CellPairVerdict {
    bool holds = true;
    CellId u = 0, v = 0;
    ModuleElement value; // ν₂(u, v) for product_trivial
};

/// m_u m_v ≠ m_{uv} for all disjoint nonempty critical u, v with uv critical.
CellPairVerdict lcm_condition(const MonomialIdeal& ideal, const std::vector<CellId>& critical);

/// No ν₂ value has a unit coefficient (the Tor product vanishes). The
/// reduction should be along a maximal matching.
CellPairVerdict product_trivial(const MerkulovTransfer& t);

/// Coefficients c_0..c_T of (1+t)^m / (1 - t(P(t) - 1)), P(t) = Σ βᵢ tⁱ.
/// Throws std::overflow_error if a coefficient leaves int64.
std::vector<std::int64_t> serre_bound_series(const std::vector<std::size_t>& ranks, std::size_t m, std::size_t T);
/// Non-negativity and c_{k+1} ≥ β_k for k ≥ 1.
bool serre_series_sane(const std::vector<std::size_t>& ranks, const std::vector<std::int64_t>& series);

enum class Resolvability { witnessed, witnessed_by_classification, unknown };
const char* to_string(Resolvability r);

struct MatchingRun {
    std::string name; // strategy name or "jollenbeck"
    Matching matching;
    bool valid = true;
    bool maximal = true;
    bool downward_closed = false;
    std::vector<std::size_t> critical_counts;
};

struct ResolvabilityWitness {
    Resolvability status = Resolvability::unknown;
    std::string classification; // "strongly generic" / "generic" when classified
    std::optional<std::size_t> run; // index into runs of the witnessing matching
    std::vector<MatchingRun> runs;
};

/// Runs the given strategies (and optionally the staged construction) and
/// looks for a maximal matching whose critical cells are downward closed.
/// Never refutes: without a witness the answer is unknown.
ResolvabilityWitness simplicially_resolvable_witness(const ComplexPtr& taylor, const std::vector<Strategy>& strategies,
                                                     bool jollenbeck = true);

/// lex, revlex, random:seed, random:seed+1.
std::vector<Strategy> default_strategies(std::uint64_t seed);

struct GolodConfig {
    Field field = Field::rationals();
    std::vector<Strategy> strategies = default_strategies(0);
    bool jollenbeck = true;
    int max_arity = 4;
    std::uint64_t seed = 0;
};

enum class Conclusion { golod, not_golod, inconclusive };
const char* to_string(Conclusion c);

struct ArityEntry {
    int arity = 0;
    bool minimal = true;
    CellTuple offender;
    std::string value;
    CellId unit_cell = 0;
    std::size_t evaluated = 0;
};

struct IndeterminacyCheck {
    Monomial multidegree;
    std::size_t basis_cells = 0;
};

struct GolodReport {
    std::string ideal;
    std::string field;
    std::uint64_t seed = 0;
    int max_arity = 0;
    std::size_t generators = 0;

    std::vector<std::size_t> tor_ranks;
    PairVerdict gcd;
    StronglyGenericVerdict strongly_generic;
    PairVerdict generic;
    ResolvabilityWitness resolvability;
    std::string primary_matching; // matching used for ν computations
    std::optional<CellPairVerdict> lcm; // on the witnessing matching
    CellPairVerdict product;
    std::vector<ArityEntry> arities;
    std::vector<IndeterminacyCheck> indeterminacy; // for the first higher offender
    std::optional<bool> all_cl2_matched;
    std::optional<StandardVerdict> standard;
    std::vector<std::string> consistency_violations;

    Conclusion conclusion = Conclusion::inconclusive;
    std::string justification;
    bool strict_unit_convention = true;

    int exit_code() const { return conclusion == Conclusion::inconclusive ? 2 : 0; }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Golod only with a resolvability witness and the gcd condition; not
/// Golod from a failed criterion or a non-minimal νₙ; otherwise
/// inconclusive, reported as B_N for N = max_arity.
GolodReport golod_decision(std::shared_ptr<const MonomialIdeal> ideal, const GolodConfig& config);

} // namespace golodkit
