#pragma once

#include "golodkit/complex.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace golodkit {

/// α → β for every nonzero component d_{β,α}.
struct MorseEdge {
    CellId from = 0;
    CellId to = 0;
    Polynomial coefficient;
    bool invertible = false; // a single nonzero constant
};

class MorseGraph {
public:
    explicit MorseGraph(ComplexPtr complex);

    const BasedComplex& complex() const { return *complex_; }
    ComplexPtr complex_ptr() const { return complex_; }
    /// Ordered by source cell, then target cell (canonical order).
    const std::vector<MorseEdge>& edges() const { return edges_; }
    const MorseEdge* find(CellId from, CellId to) const;
    std::size_t invertible_count() const;

private:
    ComplexPtr complex_;
    std::vector<MorseEdge> edges_;
    std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

/// Matched edge α → β (α one degree above β). Stage/substep are 0 when
/// the matching carries no staging.
struct Arrow {
    CellId from = 0;
    CellId to = 0;
    int stage = 0;
    int substep = 0;

    friend bool operator==(const Arrow& a, const Arrow& b) { return a.from == b.from && a.to == b.to; }
};

class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Arrow> arrows);

    const std::vector<Arrow>& arrows() const { return arrows_; }
    bool empty() const { return arrows_.empty(); }
    std::size_t size() const { return arrows_.size(); }
    void add(const Arrow& a) { arrows_.push_back(a); }

    bool is_matched(CellId c) const;
    /// Cells of `f` touched by no arrow, in canonical order.
    std::vector<CellId> critical(const BasedComplex& f) const;
    /// Upper ends (M⁺) and lower ends (M⁻).
    std::vector<CellId> upper() const;
    std::vector<CellId> lower() const;
    bool has_stages() const;

    /// Arrows in canonical order of their upper cell.
    Matching canonical() const;

private:
    std::vector<Arrow> arrows_;
};

enum class MatchingFailure { none, not_an_edge, incidence, invertibility, cycle };
const char* to_string(MatchingFailure f);

struct MatchingVerdict {
    bool valid = true;
    MatchingFailure failure = MatchingFailure::none;
    std::string message;
    std::vector<CellId> cycle; // directed cycle in G^M when failure == cycle
};

MatchingVerdict validate_matching(const MorseGraph& g, const Matching& m);

struct Strategy {
    enum class Kind { lex, revlex, random } kind = Kind::lex;
    std::uint64_t seed = 0;

    /// "lex", "revlex", "random:<seed>".
    static Strategy parse(const std::string& text);
    std::string name() const;
};

/// Greedy maximal Morse matching: candidate invertible edges in strategy
/// order, accepted when incidence holds and G^M stays acyclic (tracked with
/// a dynamic topological order); passes repeat until nothing changes.
Matching greedy_maximal_matching(const MorseGraph& g, const Strategy& strategy);

/// True when no invertible edge can be added while keeping a Morse matching.
bool is_maximal(const MorseGraph& g, const Matching& m);

/// Splitting homotopy, projection and Morse complex of a valid matching.
/// φ is computed for every cell at construction and then read-only.
class MorseReduction {
public:
    /// Throws std::invalid_argument when the matching is not a Morse matching.
    MorseReduction(ComplexPtr f, Matching m, bool check = true);

    const BasedComplex& complex() const { return *f_; }
    ComplexPtr complex_ptr() const { return f_; }
    const Matching& matching() const { return m_; }
    const std::vector<CellId>& critical() const { return critical_; }
    bool is_critical(CellId c) const;

    ModuleElement phi(CellId c) const;
    ModuleElement phi(const ModuleElement& x) const;
    /// p = 1 - dφ - φd
    ModuleElement p(const ModuleElement& x) const;
    ModuleElement p(CellId c) const;
    /// Coordinates on critical cells.
    ModuleElement q(const ModuleElement& x) const;

    ComplexPtr morse_complex() const { return morse_; }

private:
    ComplexPtr f_;
    Matching m_;
    std::vector<CellId> critical_;
    std::vector<char> critical_flag_; // by complex index
    std::vector<ModuleElement> phi_;  // by complex index
    ComplexPtr morse_;
};

} // namespace golodkit
