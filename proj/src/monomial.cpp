#include "golodkit/monomial.hpp"

#include "golodkit/simd/exponent_kernels.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace golodkit {

namespace {

const simd::ExponentKernels& K()
{
    return simd::active_kernels();
}

void check_ring(const Monomial& a, const Monomial& b)
{
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("monomials from different rings (" + std::to_string(a.nvars()) +
                                    " vs " + std::to_string(b.nvars()) + " variables)");
}

} // namespace

Monomial::Monomial(std::size_t nvars) : e_(simd::padded_length(nvars), 0u), nvars_(nvars) {}

Monomial::Monomial(const std::vector<std::uint32_t>& exponents) : Monomial(exponents.size())
{
    std::copy(exponents.begin(), exponents.end(), e_.begin());
}

bool Monomial::is_one() const
{
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t v) { return v == 0; });
}

std::uint64_t Monomial::total_degree() const
{
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

std::vector<std::uint32_t> Monomial::exponents() const
{
    return {e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(nvars_)};
}

std::vector<std::size_t> Monomial::support() const
{
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < nvars_; ++i)
        if (e_[i])
            s.push_back(i);
    return s;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    check_ring(a, b);
    Monomial out(a.nvars_);
    K().lcm(a.e_.data(), b.e_.data(), out.e_.data(), out.e_.size());
    return out;
}

Monomial gcd(const Monomial& a, const Monomial& b)
{
    check_ring(a, b);
    Monomial out(a.nvars_);
    K().gcd(a.e_.data(), b.e_.data(), out.e_.data(), out.e_.size());
    return out;
}

bool divides(const Monomial& a, const Monomial& b)
{
    check_ring(a, b);
    return K().divides(a.e_.data(), b.e_.data(), a.e_.size());
}

bool coprime(const Monomial& a, const Monomial& b)
{
    check_ring(a, b);
    return K().coprime(a.e_.data(), b.e_.data(), a.e_.size());
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    check_ring(a, b);
    Monomial out(a.nvars_);
    if (!K().add(a.e_.data(), b.e_.data(), out.e_.data(), out.e_.size()))
        throw std::overflow_error("exponent overflow in monomial product");
    return out;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    check_ring(a, b);
    Monomial out(a.nvars_);
    if (!K().sub(a.e_.data(), b.e_.data(), out.e_.data(), out.e_.size()))
        throw std::domain_error("monomial quotient: divisor does not divide");
    return out;
}

bool operator==(const Monomial& a, const Monomial& b)
{
    return a.nvars_ == b.nvars_ && K().equal(a.e_.data(), b.e_.data(), a.e_.size());
}

bool lex_greater(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.nvars_; ++i)
        if (a.e_[i] != b.e_[i])
            return a.e_[i] > b.e_[i];
    return false;
}

std::size_t Monomial::hash() const
{
    return boost::hash_range(e_.begin(), e_.end());
}

std::string Monomial::to_string(const std::vector<std::string>& vars) const
{
    std::string out;
    for (std::size_t i = 0; i < nvars_; ++i) {
        if (!e_[i])
            continue;
        if (!out.empty())
            out += '*';
        out += i < vars.size() ? vars[i] : "x" + std::to_string(i + 1);
        if (e_[i] > 1)
            out += '^' + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
}

std::vector<int> cell_indices(CellId c)
{
    std::vector<int> out;
    for (int j = 0; c; ++j, c >>= 1)
        if (c & 1)
            out.push_back(j);
    return out;
}

CellId cell_from_indices(const std::vector<int>& zero_based)
{
    CellId c = 0;
    for (int j : zero_based) {
        if (j < 0 || j >= 32)
            throw std::out_of_range("generator index out of range");
        c |= CellId{1} << j;
    }
    return c;
}

std::string cell_name(CellId c, std::size_t r)
{
    auto idx = cell_indices(c);
    if (idx.empty())
        return "u{}";
    std::string out = "u";
    if (r <= 9) {
        for (int j : idx)
            out += static_cast<char>('1' + j);
        return out;
    }
    out += '{';
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k)
            out += ',';
        out += std::to_string(idx[k] + 1);
    }
    return out + '}';
}

std::size_t max_generators()
{
    if (const char* env = std::getenv("GOLODKIT_MAX_GENERATORS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 32)
            return v;
    }
    return 20;
}

CapExceeded::CapExceeded(std::size_t r, std::size_t cap)
    : msg_(std::to_string(r) + " generators exceeds the cap of " + std::to_string(cap) +
           " (set GOLODKIT_MAX_GENERATORS to override)")
{
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> generators)
    : vars_(std::move(vars)), gens_(std::move(generators))
{
    if (gens_.empty())
        throw std::invalid_argument("ideal has no generators");
    if (gens_.size() >= 32)
        throw std::invalid_argument("at most 31 generators can be indexed");
    for (const auto& g : gens_) {
        if (g.nvars() != vars_.size())
            throw std::invalid_argument("generator has wrong variable count");
        if (g.is_one())
            throw std::invalid_argument("the unit ideal is not supported");
    }
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = 0; j < gens_.size(); ++j)
            if (i != j && divides(gens_[i], gens_[j]))
                throw std::invalid_argument("generator " + std::to_string(i + 1) + " divides generator " +
                                            std::to_string(j + 1) + "; generating set is not minimal");
}

Monomial MonomialIdeal::multidegree(CellId J) const
{
    if (gens_.size() < 32 && (J >> gens_.size()) != 0)
        throw std::out_of_range("subset refers to a generator index beyond r");
    Monomial m(vars_.size());
    for (int j : cell_indices(J))
        m = lcm(m, gens_[static_cast<std::size_t>(j)]);
    return m;
}

std::vector<CellId> MonomialIdeal::cl_classes(CellId J) const
{
    if (J == 0)
        throw std::invalid_argument("cl is undefined on the empty subset");
    auto idx = cell_indices(J);
    std::vector<int> parent(idx.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (!coprime(gens_[idx[a]], gens_[idx[b]]))
                parent[find(static_cast<int>(a))] = find(static_cast<int>(b));
    std::vector<CellId> classes;
    std::vector<int> root_slot(idx.size(), -1);
    for (std::size_t a = 0; a < idx.size(); ++a) {
        int root = find(static_cast<int>(a));
        if (root_slot[root] < 0) {
            root_slot[root] = static_cast<int>(classes.size());
            classes.push_back(0);
        }
        classes[root_slot[root]] |= CellId{1} << idx[a];
    }
    return classes;
}

int MonomialIdeal::cl(CellId J) const
{
    return static_cast<int>(cl_classes(J).size());
}

MonomialIdeal MonomialIdeal::sorted_lex() const
{
    auto g = gens_;
    std::stable_sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) { return lex_greater(a, b); });
    return MonomialIdeal(vars_, std::move(g));
}

std::string MonomialIdeal::to_string() const
{
    std::string out = "ring";
    for (const auto& v : vars_)
        out += ' ' + v;
    out += "; ideal ";
    for (std::size_t j = 0; j < gens_.size(); ++j) {
        if (j)
            out += ", ";
        out += gens_[j].to_string(vars_);
    }
    return out + ";";
}

MinimalizeResult minimalize(std::vector<std::string> vars, const std::vector<Monomial>& generators)
{
    MinimalizeResult res;
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        if (g.nvars() != vars.size())
            throw std::invalid_argument("generator has wrong variable count");
        if (g.is_one())
            throw std::invalid_argument("the unit ideal is not supported");
        bool redundant = false;
        for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
            if (i == j || !divides(generators[j], g))
                continue;
            // strictly smaller divisor, or an earlier duplicate
            redundant = !(generators[j] == g) || j < i;
        }
        if (redundant)
            res.already_minimal = false;
        else
            kept.push_back(g);
    }
    if (kept.empty())
        throw std::invalid_argument("the zero ideal is not supported");
    res.ideal = MonomialIdeal(std::move(vars), std::move(kept));
    return res;
}

} // namespace golodkit
