#include "golodkit/ainf.hpp"

#include <stdexcept>
#include <unordered_set>

namespace golodkit {

MerkulovTransfer::MerkulovTransfer(std::shared_ptr<const MorseReduction> reduction) : red_(std::move(reduction))
{
    if (!red_ || !red_->complex().is_taylor())
        throw std::invalid_argument("the transfer starts from a Morse reduction of the Taylor complex");
    const auto& f = red_->complex();
    p_of_.resize(f.size());
    std::unordered_set<CellId> crit(red_->critical().begin(), red_->critical().end());
    downward_closed_ = true;
    for (CellId c : red_->critical()) {
        p_of_[static_cast<std::size_t>(f.index_of(c))] = red_->p(c);
        if (c)
            basis_.push_back(c);
        for (CellId rest = c; rest; rest &= rest - 1)
            if (!crit.count(c & ~(rest & (~rest + 1))))
                downward_closed_ = false;
    }
}

const ModuleElement& MerkulovTransfer::lambda(const CellTuple& cells) const
{
    auto it = lambda_memo_.find(cells);
    if (it != lambda_memo_.end())
        return it->second;
    ModuleElement v = compute_lambda(cells);
    return lambda_memo_.emplace(cells, std::move(v)).first->second;
}

const ModuleElement& MerkulovTransfer::g(const CellTuple& cells) const
{
    auto it = g_memo_.find(cells);
    if (it != g_memo_.end())
        return it->second;
    ModuleElement v = cells.size() == 1 ? ModuleElement::basis(cells[0], taylor().field(), taylor().ideal().nvars())
                                        : -red_->phi(lambda(cells));
    return g_memo_.emplace(cells, std::move(v)).first->second;
}

ModuleElement MerkulovTransfer::compute_lambda(const CellTuple& cells) const
{
    const auto& t = taylor();
    std::size_t n = cells.size();
    if (n == 0)
        throw std::invalid_argument("lambda needs at least one input");
    if (n == 1)
        return ModuleElement::basis(cells[0], t.field(), t.ideal().nvars());

    ElementBuilder b;
    int degree_prefix = 0;
    for (std::size_t s = 1; s < n; ++s) {
        degree_prefix += cell_degree(cells[s - 1]);
        std::size_t tt = n - s;
        CellTuple left(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(s));
        CellTuple right(cells.begin() + static_cast<std::ptrdiff_t>(s), cells.end());
        const ModuleElement& gl = g(left);
        if (gl.is_zero())
            continue;
        const ModuleElement& gr = g(right);
        if (gr.is_zero())
            continue;
        bool negative = ((s + 1) % 2 == 1) != (((tt - 1) * static_cast<std::size_t>(degree_prefix)) % 2 == 1);
        b.add_scaled(taylor_multiply(t, gl, gr), Scalar(t.field(), negative ? -1 : 1));
    }
    return b.build();
}

ModuleElement MerkulovTransfer::multilinear(const std::vector<ModuleElement>& xs, bool apply_p) const
{
    const auto& t = taylor();
    std::size_t n = xs.size();
    for (const auto& x : xs)
        if (x.is_zero())
            return {};
    ElementBuilder b;
    std::vector<std::size_t> pick(n, 0);
    CellTuple cells(n);
    while (true) {
        Scalar coef = Scalar::one(t.field());
        Monomial mono(t.ideal().nvars());
        for (std::size_t i = 0; i < n; ++i) {
            const Term& term = xs[i].terms()[pick[i]];
            cells[i] = term.cell;
            coef = coef * term.coef;
            mono = mono * term.mono;
        }
        const ModuleElement& l = lambda(cells);
        if (!l.is_zero())
            b.add(l, coef, mono);
        std::size_t i = n;
        bool more = false;
        while (i > 0) {
            --i;
            if (++pick[i] < xs[i].size()) {
                more = true;
                break;
            }
            pick[i] = 0;
        }
        if (!more)
            break;
    }
    ModuleElement out = b.build();
    return apply_p ? red_->p(out) : out;
}

ModuleElement MerkulovTransfer::lambda(const std::vector<ModuleElement>& xs) const
{
    return multilinear(xs, false);
}

ModuleElement MerkulovTransfer::mu(const std::vector<ModuleElement>& xs) const
{
    if (xs.empty())
        throw std::invalid_argument("mu needs at least one input");
    if (xs.size() == 1)
        return taylor().apply_d(xs[0]);
    if (xs.size() >= 3)
        for (const auto& x : xs)
            if (x.degree() == 0)
                return {};
    return multilinear(xs, true);
}

ModuleElement MerkulovTransfer::mu_critical(const CellTuple& critical) const
{
    std::vector<ModuleElement> xs;
    xs.reserve(critical.size());
    for (CellId c : critical) {
        if (!red_->is_critical(c))
            throw std::invalid_argument("mu_critical takes critical cells");
        xs.push_back(p_of_[static_cast<std::size_t>(taylor().index_of(c))]);
    }
    return mu(xs);
}

ModuleElement MerkulovTransfer::nu(const CellTuple& critical) const
{
    if (critical.size() == 1) {
        if (!red_->is_critical(critical[0]))
            throw std::invalid_argument("nu takes critical cells");
        return red_->morse_complex()->d(critical[0]);
    }
    return red_->q(mu_critical(critical));
}

ModuleElement MerkulovTransfer::nu_short(const CellTuple& critical) const
{
    for (CellId c : critical)
        if (!red_->is_critical(c))
            throw std::invalid_argument("nu_short takes critical cells");
    if (critical.size() == 1)
        return red_->morse_complex()->d(critical[0]);
    if (critical.size() >= 3)
        for (CellId c : critical)
            if (c == 0)
                return {};
    return red_->q(lambda(critical));
}

ArityVerdict check_arity_minimal(const MerkulovTransfer& t, int n)
{
    if (n < 2)
        throw std::invalid_argument("arity must be at least 2");
    const auto& f = t.taylor();
    const auto& basis = t.basis();
    std::unordered_map<int, std::unordered_set<Monomial, MonomialHash>> targets;
    for (CellId c : t.reduction().critical())
        targets[cell_degree(c)].insert(f.multidegree(c));

    ArityVerdict v;
    v.arity = n;
    CellTuple tuple;
    Monomial product(f.ideal().nvars());
    int degree = 0;
    auto search = [&](auto&& self) -> bool {
        if (tuple.size() == static_cast<std::size_t>(n)) {
            auto it = targets.find(degree + n - 2);
            if (it == targets.end() || !it->second.count(product))
                return false;
            ++v.evaluated;
            ModuleElement val = t.nu(tuple);
            for (const auto& term : val.terms())
                if (term.mono.is_one()) {
                    v.minimal = false;
                    v.offender = tuple;
                    v.value = val;
                    v.unit_cell = term.cell;
                    return true;
                }
            return false;
        }
        for (CellId c : basis) {
            const Monomial& m = f.multidegree(c);
            if (!coprime(m, product))
                continue;
            Monomial saved = product;
            tuple.push_back(c);
            product = product * m;
            degree += cell_degree(c);
            bool stop = self(self);
            degree -= cell_degree(c);
            product = saved;
            tuple.pop_back();
            if (stop)
                return true;
        }
        return false;
    };
    search(search);
    return v;
}

AInfTable materialize(const MerkulovTransfer& t, int n, bool morse_coordinates, std::optional<std::vector<CellId>> basis)
{
    if (n < 1)
        throw std::invalid_argument("arity must be positive");
    AInfTable table;
    table.arity = n;
    table.morse_coordinates = morse_coordinates;
    table.basis = basis ? *basis : t.basis();
    std::size_t k = table.basis.size();
    if (k == 0)
        return table;
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    while (true) {
        CellTuple tuple;
        for (std::size_t i : pick)
            tuple.push_back(table.basis[i]);
        table.entries.emplace_back(tuple, morse_coordinates ? t.nu(tuple) : t.mu_critical(tuple));
        std::size_t i = pick.size();
        bool more = false;
        while (i > 0) {
            --i;
            if (++pick[i] < k) {
                more = true;
                break;
            }
            pick[i] = 0;
        }
        if (!more)
            break;
    }
    return table;
}

StasheffVerdict verify_stasheff(const MerkulovTransfer& t, int max_arity)
{
    StasheffVerdict v;
    const auto& f = t.taylor();
    const auto& crit = t.reduction().critical();
    std::vector<ModuleElement> pc;
    for (CellId c : crit)
        pc.push_back(t.reduction().p(c));
    std::size_t k = crit.size();

    for (int n = 1; n <= max_arity && k > 0; ++n) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<ModuleElement> b;
            for (std::size_t i : pick)
                b.push_back(pc[i]);
            ElementBuilder sum;
            for (int s = 1; s <= n; ++s)
                for (int r = 0; r + s <= n; ++r) {
                    int tt = n - r - s;
                    std::vector<ModuleElement> inner(b.begin() + r, b.begin() + r + s);
                    ModuleElement ms = t.mu(inner);
                    if (ms.is_zero())
                        continue;
                    std::vector<ModuleElement> outer(b.begin(), b.begin() + r);
                    outer.push_back(ms);
                    outer.insert(outer.end(), b.begin() + r + s, b.end());
                    ModuleElement val = t.mu(outer);
                    if (val.is_zero())
                        continue;
                    int prefix = 0;
                    for (int i = 0; i < r; ++i)
                        prefix += cell_degree(crit[pick[static_cast<std::size_t>(i)]]);
                    int exponent = r + s * tt + ((s % 2 == 0) ? 0 : prefix);
                    sum.add_scaled(val, Scalar(f.field(), exponent % 2 ? -1 : 1));
                }
            ++v.evaluated;
            ModuleElement residual = sum.build();
            if (!residual.is_zero()) {
                v.holds = false;
                v.arity = n;
                for (std::size_t i : pick)
                    v.inputs.push_back(crit[i]);
                v.residual = residual;
                return v;
            }
            std::size_t i = pick.size();
            bool more = false;
            while (i > 0) {
                --i;
                if (++pick[i] < k) {
                    more = true;
                    break;
                }
                pick[i] = 0;
            }
            if (!more)
                break;
        }
    }
    return v;
}

bool multidegree_consistent(const BasedComplex& f, const std::vector<Monomial>& inputs, const ModuleElement& out)
{
    if (inputs.empty())
        return out.is_zero();
    Monomial l = inputs.front(), prod = inputs.front();
    for (std::size_t i = 1; i < inputs.size(); ++i) {
        l = lcm(l, inputs[i]);
        prod = prod * inputs[i];
    }
    for (const auto& term : out.terms()) {
        const Monomial& m = f.multidegree(term.cell);
        if (!divides(m, l) || !(term.mono * m == prod))
            return false;
    }
    return true;
}

} // namespace golodkit
