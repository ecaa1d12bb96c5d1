#include "exhd/combinatorics.hpp"

#include <stdexcept>

namespace exhd {

Integer binom_star(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

Integer multinomial_star(long m, std::span<const long> b) {
    Integer r = 1;
    long top = m;
    for (long bt : b) {
        r *= binom_star(top, bt);
        if (r == 0) return r;
        top -= bt;
    }
    return r;
}

Integer multinomial(const Composition& c) {
    Integer r = 1;
    long top = c.order();
    for (int v : c.counts()) {
        r *= binom_star(top, v);
        top -= v;
    }
    return r;
}

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of a negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational rising_factorial(const Rational& x, long k) {
    if (k < 0) throw std::domain_error("rising factorial with negative length");
    Rational r = 1;
    Rational t = x;
    for (long i = 0; i < k; ++i) {
        r *= t;
        t += 1;
    }
    return r;
}

Rational beta_ratio(const Rational& p, const Rational& q, long dp, long dq) {
    if (p.sign() <= 0 || q.sign() <= 0) throw std::domain_error("beta_ratio requires p > 0 and q > 0");
    if (dp < 0 || dq < 0) throw std::domain_error("beta_ratio requires non-negative shifts");
    return rising_factorial(p, dp) * rising_factorial(q, dq) / rising_factorial(p + q, dp + dq);
}

}  // namespace exhd
