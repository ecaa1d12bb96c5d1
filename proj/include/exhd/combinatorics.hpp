#pragma once

#include <span>

#include "exhd/composition.hpp"
#include "exhd/rational.hpp"

namespace exhd {

/// Binomial coefficient with an indicator: C(a,b) when 0 <= b <= a, else 0.
/// Any integers are accepted; out-of-range terms vanish instead of erroring.
Integer binom_star(long a, long b);

/// Chained product C*(m,b_1) C*(m-b_1,b_2) ... C*(m-b_1-...-b_{k-1},b_k).
/// Equals m!/(b_1!...b_k!(m-sum b)!) whenever every factor is in range.
Integer multinomial_star(long m, std::span<const long> b);

/// Ordinary multinomial n!/(c_1!...c_K!) of a full composition.
Integer multinomial(const Composition& c);

Integer factorial(long n);

/// x (x+1) ... (x+k-1); 1 when k == 0.
Rational rising_factorial(const Rational& x, long k);

/// B(p+dp, q+dq) / B(p,q), computed as rising(p,dp) rising(q,dq) / rising(p+q,dp+dq).
/// Throws std::domain_error unless p > 0 and q > 0 and dp, dq >= 0.
Rational beta_ratio(const Rational& p, const Rational& q, long dp, long dq);

}  // namespace exhd
