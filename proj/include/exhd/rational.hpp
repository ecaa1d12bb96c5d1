#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace exhd {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number, always held in canonical form
/// (positive denominator, numerator and denominator coprime).
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
    Rational(const Integer& value) : q_(value) {}  // NOLINT
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "a", "a/b" or "-a/b" (whitespace not allowed). Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Always "num/den", including for integers ("3/1", "0/1").
    std::string to_string() const;
    double to_double() const { return q_.get_d(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    std::size_t hash() const;

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

/// x^e for a non-negative exponent.
Rational pow(const Rational& x, unsigned long e);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace exhd

template <>
struct std::hash<exhd::Rational> {
    std::size_t operator()(const exhd::Rational& r) const noexcept { return r.hash(); }
};
