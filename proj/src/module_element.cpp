#include "golodkit/module_element.hpp"

#include <algorithm>
#include <stdexcept>

namespace golodkit {

bool term_less(const Term& a, const Term& b)
{
    if (a.cell != b.cell)
        return cell_less(a.cell, b.cell);
    return lex_greater(a.mono, b.mono);
}

namespace {

bool is_negative(const Scalar& s)
{
    return s.characteristic() == 0 && s.numerator() < 0;
}

// Renders c*m with the sign stripped when `drop_sign` is set.
std::string scalar_monomial(const Scalar& c, const Monomial& m, const std::vector<std::string>& vars,
                            bool drop_sign)
{
    Scalar mag = drop_sign && is_negative(c) ? -c : c;
    bool unit_mono = m.is_one();
    if (unit_mono)
        return mag.to_string();
    std::string mono = m.to_string(vars);
    if (mag.is_one())
        return mono;
    if (mag == -Scalar::one(mag.field()))
        return "-" + mono;
    return mag.to_string() + "*" + mono;
}

std::string join_signed(const std::vector<std::pair<bool, std::string>>& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& [neg, body] = parts[i];
        if (i == 0)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

} // namespace

std::string polynomial_to_string(const Polynomial& p, const std::vector<std::string>& vars)
{
    if (p.empty())
        return "0";
    std::vector<std::pair<bool, std::string>> parts;
    for (const auto& [m, c] : p)
        parts.emplace_back(is_negative(c), scalar_monomial(c, m, vars, true));
    return join_signed(parts);
}

ModuleElement ModuleElement::basis(CellId c, Field f, std::size_t nvars)
{
    return monomial_term(c, Monomial(nvars), Scalar::one(f));
}

ModuleElement ModuleElement::monomial_term(CellId c, Monomial m, Scalar s)
{
    ModuleElement e;
    if (!s.is_zero())
        e.terms_.push_back({c, std::move(m), s});
    return e;
}

std::vector<CellId> ModuleElement::support() const
{
    std::vector<CellId> out;
    for (const auto& t : terms_)
        if (out.empty() || out.back() != t.cell)
            out.push_back(t.cell);
    return out;
}

Polynomial ModuleElement::coefficient(CellId c) const
{
    Polynomial p;
    for (const auto& t : terms_)
        if (t.cell == c)
            p.emplace_back(t.mono, t.coef);
    return p;
}

bool ModuleElement::has_unit_coefficient() const
{
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.is_one(); });
}

int ModuleElement::degree() const
{
    if (terms_.empty())
        return -1;
    int d = cell_degree(terms_.front().cell);
    for (const auto& t : terms_)
        if (cell_degree(t.cell) != d)
            throw std::logic_error("module element mixes homological degrees");
    return d;
}

ModuleElement ModuleElement::scaled(const Scalar& s, const Monomial& m) const
{
    ModuleElement out;
    if (s.is_zero())
        return out;
    out.terms_.reserve(terms_.size());
    // multiplying by a monomial preserves lex order among one cell's terms
    for (const auto& t : terms_)
        out.terms_.push_back({t.cell, t.mono * m, t.coef * s});
    return out;
}

ModuleElement ModuleElement::scaled(const Scalar& s) const
{
    ModuleElement out;
    if (s.is_zero())
        return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_)
        t.coef *= s;
    return out;
}

ModuleElement ModuleElement::operator-() const
{
    ModuleElement out = *this;
    for (auto& t : out.terms_)
        t.coef = -t.coef;
    return out;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o)
{
    if (o.terms_.empty())
        return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && term_less(*a, *b))) {
            merged.push_back(std::move(*a++));
        } else if (a == ae || term_less(*b, *a)) {
            merged.push_back(*b++);
        } else {
            Scalar s = a->coef + b->coef;
            if (!s.is_zero())
                merged.push_back({a->cell, std::move(a->mono), s});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o)
{
    return *this += -o;
}

bool operator==(const ModuleElement& a, const ModuleElement& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.cell != y.cell || !(x.mono == y.mono) || !(x.coef == y.coef))
            return false;
    }
    return true;
}

std::string ModuleElement::to_string(const std::vector<std::string>& vars, std::size_t r) const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<bool, std::string>> parts;
    std::size_t i = 0;
    while (i < terms_.size()) {
        std::size_t j = i;
        while (j < terms_.size() && terms_[j].cell == terms_[i].cell)
            ++j;
        std::string cell = cell_name(terms_[i].cell, r);
        if (j - i == 1) {
            const auto& t = terms_[i];
            bool neg = is_negative(t.coef);
            Scalar mag = neg ? -t.coef : t.coef;
            std::string body;
            if (t.mono.is_one())
                body = mag.is_one() ? cell : mag.to_string() + "*" + cell;
            else
                body = scalar_monomial(mag, t.mono, vars, false) + "*" + cell;
            parts.emplace_back(neg, body);
        } else {
            Polynomial p;
            for (std::size_t k = i; k < j; ++k)
                p.emplace_back(terms_[k].mono, terms_[k].coef);
            parts.emplace_back(false, "(" + polynomial_to_string(p, vars) + ")*" + cell);
        }
        i = j;
    }
    return join_signed(parts);
}

void ElementBuilder::add(CellId c, const Monomial& m, const Scalar& s)
{
    if (!s.is_zero())
        raw_.push_back({c, m, s});
}

void ElementBuilder::add(const ModuleElement& e)
{
    raw_.insert(raw_.end(), e.terms_.begin(), e.terms_.end());
}

void ElementBuilder::add(const ModuleElement& e, const Scalar& s, const Monomial& m)
{
    if (s.is_zero())
        return;
    for (const auto& t : e.terms_)
        raw_.push_back({t.cell, t.mono * m, t.coef * s});
}

void ElementBuilder::add_scaled(const ModuleElement& e, const Scalar& s)
{
    if (s.is_zero())
        return;
    for (const auto& t : e.terms_)
        raw_.push_back({t.cell, t.mono, t.coef * s});
}

ModuleElement ElementBuilder::build()
{
    std::sort(raw_.begin(), raw_.end(), term_less);
    ModuleElement out;
    for (auto& t : raw_) {
        if (!out.terms_.empty() && out.terms_.back().cell == t.cell && out.terms_.back().mono == t.mono) {
            out.terms_.back().coef += t.coef;
            if (out.terms_.back().coef.is_zero())
                out.terms_.pop_back();
        } else {
            out.terms_.push_back(std::move(t));
        }
    }
    raw_.clear();
    return out;
}

} // namespace golodkit
