#include "golodkit/scalar.hpp"

#include <charconv>
#include <numeric>

namespace golodkit {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("rational coefficient overflow (multiplication)");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("rational coefficient overflow (addition)");
    return out;
}

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::int64_t mod_p(std::int64_t v, std::uint32_t p)
{
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::uint32_t p)
{
    std::uint64_t result = 1;
    std::uint64_t b = static_cast<std::uint64_t>(base) % p;
    while (exp) {
        if (exp & 1)
            result = result * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

} // namespace

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(const std::string& text)
{
    if (text == "q" || text == "qq" || text == "QQ" || text == "rationals")
        return rationals();
    if (text == "f2" || text == "F2")
        return prime(2);
    if (text.rfind("fp:", 0) == 0) {
        std::uint32_t p = 0;
        auto* first = text.data() + 3;
        auto* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, p);
        if (ec != std::errc{} || ptr != last)
            throw std::invalid_argument("malformed field characteristic in '" + text + "'");
        return prime(p);
    }
    throw std::invalid_argument("unknown field '" + text + "' (expected q, f2 or fp:<p>)");
}

std::string Field::name() const
{
    return is_rational() ? "QQ" : "F" + std::to_string(p_);
}

Scalar::Scalar(Field field, std::int64_t value) : num_(value), den_(1), p_(field.characteristic())
{
    if (p_)
        num_ = mod_p(num_, p_);
}

Scalar::Scalar(Field field, std::int64_t num, std::int64_t den)
    : num_(num), den_(den), p_(field.characteristic())
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    normalize();
}

void Scalar::normalize()
{
    if (p_) {
        std::int64_t d = mod_p(den_, p_);
        if (d == 0)
            throw std::domain_error("denominator vanishes in " + field().name());
        num_ = mod_p(num_, p_) * pow_mod(d, p_ - 2, p_) % p_;
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = checked_mul(num_, -1);
        den_ = checked_mul(den_, -1);
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0)
        den_ = 1;
}

void Scalar::check_same_field(const Scalar& o) const
{
    if (p_ != o.p_)
        throw std::invalid_argument("scalar field mismatch: " + field().name() + " vs " + o.field().name());
}

Scalar Scalar::inverse() const
{
    if (num_ == 0)
        throw std::domain_error("inverse of zero");
    Scalar r = *this;
    if (p_) {
        r.num_ = pow_mod(num_, p_ - 2, p_);
        return r;
    }
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.num_ = p_ ? (num_ == 0 ? 0 : p_ - num_) : checked_mul(num_, -1);
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    check_same_field(o);
    if (p_) {
        num_ = (num_ + o.num_) % p_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ = checked_add(num_, o.num_);
    } else {
        num_ = checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_));
        den_ = checked_mul(den_, o.den_);
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    check_same_field(o);
    if (p_) {
        num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(num_) * o.num_ % p_);
        return *this;
    }
    // cross-reduce first to keep intermediates small
    std::int64_t g1 = std::gcd(num_, o.den_);
    std::int64_t g2 = std::gcd(o.num_, den_);
    if (g1 == 0)
        g1 = 1;
    if (g2 == 0)
        g2 = 1;
    num_ = checked_mul(num_ / g1, o.num_ / g2);
    den_ = checked_mul(den_ / g2, o.den_ / g1);
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    check_same_field(o);
    return *this *= o.inverse();
}

std::string Scalar::to_string() const
{
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::parse(Field field, const std::string& text)
{
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw std::invalid_argument("malformed scalar '" + text + "'");
        return v;
    };
    std::string_view sv(text);
    if (slash == std::string::npos)
        return Scalar(field, parse_int(sv));
    return Scalar(field, parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

} // namespace golodkit
