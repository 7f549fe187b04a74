#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <exception>
#include <string>
#include <vector>

namespace golodkit {

/// Exponent vector over a fixed variable count. Storage is zero-padded to a
/// multiple of simd::kLanes; only the first nvars() entries are meaningful.
class Monomial {
public:
    using Storage = boost::container::small_vector<std::uint32_t, 8>;

    Monomial() : Monomial(0) {}
    explicit Monomial(std::size_t nvars);
    explicit Monomial(const std::vector<std::uint32_t>& exponents);

    std::size_t nvars() const { return nvars_; }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, std::uint32_t v) { e_[i] = v; }

    bool is_one() const;
    std::uint64_t total_degree() const;
    std::vector<std::uint32_t> exponents() const;
    /// Indices of variables with nonzero exponent.
    std::vector<std::size_t> support() const;

    const std::uint32_t* lanes() const { return e_.data(); }
    std::size_t lane_count() const { return e_.size(); }

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend bool divides(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// a / b; throws std::domain_error unless b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b);

    /// Lexicographic comparison with x1 > x2 > ... ; true when a > b.
    friend bool lex_greater(const Monomial& a, const Monomial& b);

    std::size_t hash() const;

    /// "x1*x2^2", or "1" for the unit.
    std::string to_string(const std::vector<std::string>& vars) const;

private:
    Storage e_;
    std::size_t nvars_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Cells of Taylor-derived complexes are subsets of generator indices,
// encoded as bitmasks (bit j = generator j+1).
using CellId = std::uint32_t;

inline int cell_degree(CellId c)
{
    return __builtin_popcount(c);
}

/// Canonical cell order: by cardinality, then lexicographically on the
/// increasing index lists (so u12 < u14 < u23 < u34).
inline bool cell_less(CellId a, CellId b)
{
    int da = cell_degree(a), db = cell_degree(b);
    if (da != db)
        return da < db;
    CellId x = a ^ b;
    return x != 0 && (a & (x & (~x + 1))) != 0;
}

std::vector<int> cell_indices(CellId c);
CellId cell_from_indices(const std::vector<int>& zero_based);
/// "u124" when r <= 9, "u{1,10}" otherwise, "u{}" for the empty cell.
std::string cell_name(CellId c, std::size_t r);

/// Hard generator cap; GOLODKIT_MAX_GENERATORS overrides.
std::size_t max_generators();
inline constexpr std::size_t kGeneratorWarnThreshold = 14;

class CapExceeded : public std::exception {
public:
    CapExceeded(std::size_t r, std::size_t cap);
    const char* what() const noexcept override { return msg_.c_str(); }

private:
    std::string msg_;
};

/// Minimal monomial ideal with generators in a fixed order.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Throws std::invalid_argument if the generators are not a minimal
    /// generating set, contain the unit, or disagree with the variable count.
    MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> generators);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    std::size_t size() const { return gens_.size(); }
    const Monomial& generator(std::size_t j) const { return gens_[j]; }
    const std::vector<Monomial>& generators() const { return gens_; }
    CellId full_cell() const { return gens_.size() >= 32 ? ~0u : (1u << gens_.size()) - 1; }

    /// lcm of the generators in J; the unit for J = 0.
    Monomial multidegree(CellId J) const;

    /// Connected components of J under "gcd != 1".
    std::vector<CellId> cl_classes(CellId J) const;
    int cl(CellId J) const;

    /// Generators sorted lexicographically descending.
    MonomialIdeal sorted_lex() const;

    std::string to_string() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<std::string> vars_;
    std::vector<Monomial> gens_;
};

struct MinimalizeResult {
    MonomialIdeal ideal;
    bool already_minimal = true;
};

/// Drops duplicates and generators divisible by another, keeping input
/// order of the survivors. Rejects an empty result and the unit ideal.
MinimalizeResult minimalize(std::vector<std::string> vars, const std::vector<Monomial>& generators);

} // namespace golodkit
