#pragma once

#include "golodkit/monomial.hpp"
#include "golodkit/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace golodkit {

struct Term {
    CellId cell = 0;
    Monomial mono;
    Scalar coef;
};

/// Canonical term order: cell_less on cells, then lex-descending monomials.
bool term_less(const Term& a, const Term& b);

/// A polynomial coefficient, lex-descending, no zero entries.
using Polynomial = std::vector<std::pair<Monomial, Scalar>>;
std::string polynomial_to_string(const Polynomial& p, const std::vector<std::string>& vars);

/// Finite sum of (scalar * monomial) * u_cell. Terms are kept in canonical
/// order with no zero coefficients, so equality is structural.
class ModuleElement {
public:
    ModuleElement() = default;

    static ModuleElement basis(CellId c, Field f, std::size_t nvars);
    static ModuleElement monomial_term(CellId c, Monomial m, Scalar s);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Distinct cells in canonical order.
    std::vector<CellId> support() const;
    Polynomial coefficient(CellId c) const;
    /// True if some cell carries a nonzero constant term.
    bool has_unit_coefficient() const;
    /// Homological degree of the terms, or -1 when zero; throws if mixed.
    int degree() const;

    /// Multiply every coefficient by s * m.
    ModuleElement scaled(const Scalar& s, const Monomial& m) const;
    ModuleElement scaled(const Scalar& s) const;

    ModuleElement operator-() const;
    ModuleElement& operator+=(const ModuleElement& o);
    ModuleElement& operator-=(const ModuleElement& o);
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }

    friend bool operator==(const ModuleElement& a, const ModuleElement& b);

    /// "x3*u14 - x4*u12"-style rendering in canonical order; "0" when zero.
    std::string to_string(const std::vector<std::string>& vars, std::size_t r) const;

private:
    friend class ElementBuilder;
    std::vector<Term> terms_;
};

/// Accumulates unsorted terms, then canonicalizes once.
class ElementBuilder {
public:
    void add(CellId c, const Monomial& m, const Scalar& s);
    void add(const ModuleElement& e);
    /// Adds s * m * e.
    void add(const ModuleElement& e, const Scalar& s, const Monomial& m);
    void add_scaled(const ModuleElement& e, const Scalar& s);
    bool empty() const { return raw_.empty(); }
    ModuleElement build();

private:
    std::vector<Term> raw_;
};

} // namespace golodkit
