#include "exhd/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace exhd {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!is_digits(s)) throw std::invalid_argument("malformed integer");
    Integer value(std::string(s), 10);
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(parse_integer(text));
        const std::string_view den = text.substr(slash + 1);
        if (!is_digits(den)) throw std::invalid_argument("malformed denominator");
        return Rational(parse_integer(text.substr(0, slash)), Integer(std::string(den), 10));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + std::string(text) + "'");
    }
}

std::string Rational::to_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::size_t Rational::hash() const {
    // Canonical form makes (num, den) a structural key.
    const std::hash<std::string> h;
    return h(q_.get_num().get_str(16)) * 1000003u ^ h(q_.get_den().get_str(16));
}

Rational pow(const Rational& x, unsigned long e) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), e);
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace exhd
