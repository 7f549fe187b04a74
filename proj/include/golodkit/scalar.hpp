#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace golodkit {

/// Coefficient field: the rationals, or the prime field F_p.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rationals() { return Field{}; }
    /// Throws std::invalid_argument unless `p` is prime.
    static Field prime(std::uint32_t p);
    /// Parses "q", "qq", "f2", "fp:<p>".
    static Field parse(const std::string& text);

    constexpr bool is_rational() const { return p_ == 0; }
    constexpr std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    friend constexpr bool operator==(Field, Field) = default;

private:
    constexpr explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

/// Exact field element. Rationals are kept reduced with a positive
/// denominator and 64-bit components; any overflow raises std::overflow_error
/// rather than wrapping. Prime-field values live in [0, p).
class Scalar {
public:
    Scalar() = default;
    Scalar(Field field, std::int64_t value);
    Scalar(Field field, std::int64_t num, std::int64_t den);

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }

    Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
    std::uint32_t characteristic() const { return p_; }
    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.p_ == b.p_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "3", "-1/2"; prime-field values print as their representative.
    std::string to_string() const;
    /// Inverse of to_string for the given field.
    static Scalar parse(Field field, const std::string& text);

private:
    void check_same_field(const Scalar& o) const;
    void normalize();

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace golodkit
