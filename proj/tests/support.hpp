#pragma once

// Shared fixtures, seeded generators and brute-force oracles for the tests.
// Oracles here deliberately avoid the library's closed forms.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "exhd/combinatorics.hpp"
#include "exhd/composition.hpp"
#include "exhd/laws.hpp"
#include "exhd/rational.hpp"
#include "exhd/statistic.hpp"

namespace testing_support {

using exhd::Composition;
using exhd::ExchangeableLaw;
using exhd::Integer;
using exhd::Rational;

inline Rational q(long a, long b = 1) { return Rational(a, b); }

inline ExchangeableLaw hls_a() { return ExchangeableLaw::hls(3, q(1), q(2), {q(1, 2)}); }
inline ExchangeableLaw hls_b() { return ExchangeableLaw::hls(3, q(3, 2), q(5, 2), {q(1, 3)}); }
inline ExchangeableLaw hls_k4() { return ExchangeableLaw::hls(4, q(1), q(2), {q(1, 4), q(1, 4)}); }
inline ExchangeableLaw iid3() { return ExchangeableLaw::iid({q(1, 2), q(1, 3), q(1, 6)}); }
inline ExchangeableLaw polya3() { return ExchangeableLaw::polya({q(1), q(2), q(3)}); }
inline ExchangeableLaw mixture3() {
    return ExchangeableLaw::mixture({q(1, 2), q(1, 2)}, {{q(1, 2), q(1, 4), q(1, 4)}, {q(1, 4), q(1, 4), q(1, 2)}});
}

/// Laws known to be Hoeffding decomposable.
inline std::vector<ExchangeableLaw> decomposable_laws() { return {iid3(), polya3(), hls_a(), hls_b(), hls_k4()}; }

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int span = 5, int max_den = 4) { return q(integer(-span, span), integer(1, max_den)); }

    exhd::SymmetricStatistic statistic(int n, int K) {
        exhd::SymmetricStatistic t(n, K);
        for (std::size_t r = 0; r < t.size(); ++r) t[r] = rational();
        return t;
    }

    exhd::SymmetricKernel kernel(int k, int K) {
        exhd::SymmetricKernel phi(k, K);
        for (std::size_t r = 0; r < phi.size(); ++r) phi[r] = rational();
        return phi;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// d_1 repeated i_1 times, then d_2 repeated i_2 times, ...
inline std::vector<int> canonical_sequence(const Composition& i) {
    std::vector<int> x;
    for (int j = 0; j < i.parts(); ++j) x.insert(x.end(), static_cast<std::size_t>(i[j]), j);
    return x;
}

inline Composition counts_of(const std::vector<int>& x, int K) {
    std::vector<int> c(static_cast<std::size_t>(K), 0);
    for (int v : x) ++c[static_cast<std::size_t>(v)];
    return Composition(c);
}

/// U-statistic by summing phi over every k-subset of positions.
inline exhd::SymmetricStatistic brute_u_statistic(const exhd::SymmetricKernel& phi, int n) {
    const int K = phi.alphabet_size();
    const int k = phi.order();
    exhd::SymmetricStatistic out(n, K);
    const auto dom = out.domain();
    for (std::size_t r = 0; r < dom.size(); ++r) {
        const auto x = canonical_sequence(dom[r]);
        std::vector<bool> pick(static_cast<std::size_t>(n), false);
        std::fill(pick.begin(), pick.begin() + k, true);
        Rational total;
        do {
            std::vector<int> sub;
            for (int p = 0; p < n; ++p)
                if (pick[static_cast<std::size_t>(p)]) sub.push_back(x[static_cast<std::size_t>(p)]);
            total += phi.at(counts_of(sub, K));
        } while (std::prev_permutation(pick.begin(), pick.end()));
        out[r] = total;
    }
    return out;
}

/// Average of f over all m! rearrangements of the canonical sequence of z.
template <class F>
Rational brute_symmetrize(const F& f, int v, const Composition& z) {
    const int K = z.parts();
    std::vector<int> perm(static_cast<std::size_t>(z.order()));
    std::iota(perm.begin(), perm.end(), 0);
    const auto x = canonical_sequence(z);
    Rational total;
    long count = 0;
    do {
        std::vector<int> first, second;
        for (std::size_t p = 0; p < perm.size(); ++p) {
            (static_cast<int>(p) < v ? first : second).push_back(x[static_cast<std::size_t>(perm[p])]);
        }
        total += f(counts_of(first, K), counts_of(second, K));
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / Rational(count);
}

/// Probability of one specific sequence under a Polya law, following the
/// reinforcement step by step.
inline Rational polya_sequence_prob(const std::vector<Rational>& alpha, const std::vector<int>& x) {
    std::vector<Rational> w = alpha;
    Rational total;
    for (const auto& a : alpha) total += a;
    Rational p(1);
    for (int c : x) {
        p *= w[static_cast<std::size_t>(c)] / total;
        w[static_cast<std::size_t>(c)] += Rational(1);
        total += Rational(1);
    }
    return p;
}

/// Integral of t^a (1-t)^b over [0,1] by binomial expansion.
inline Rational monomial_integral(int a, int b) {
    Rational s;
    for (int j = 0; j <= b; ++j) {
        Rational term = Rational(exhd::binom_star(b, j)) / Rational(a + j + 1);
        if (j % 2) s -= term;
        else s += term;
    }
    return s;
}

/// HLS cylinder probability for integer pi, nu: integrate the directing curve
/// against the Beta(pi, nu) density as polynomials.
inline Rational hls_prob_by_integration(int pi, int nu, const std::vector<Rational>& alpha, const Composition& i) {
    Rational mass(1);
    Rational rest(1);
    for (std::size_t t = 0; t < alpha.size(); ++t) {
        mass *= exhd::pow(alpha[t], static_cast<unsigned long>(i[static_cast<int>(t) + 1]));
        rest -= alpha[t];
    }
    mass *= exhd::pow(rest, static_cast<unsigned long>(i[i.parts() - 1]));
    const int tail = i.order() - i[0];
    return mass * monomial_integral(pi - 1 + i[0], nu - 1 + tail) / monomial_integral(pi - 1, nu - 1);
}

/// Gamma(x) for x in (1/2)Z, x > 0, as (rational factor, power of sqrt(pi)).
inline std::pair<Rational, int> half_integer_gamma(const Rational& x) {
    Rational y = x;
    Rational factor(1);
    const bool half = !x.is_integer();
    const Rational base = half ? q(1, 2) : q(1);
    while (y > base) {
        y -= Rational(1);
        factor *= y;
    }
    return {factor, half ? 1 : 0};
}

/// B(p+dp, q+dq)/B(p, q) through explicit Gamma values.
inline Rational beta_ratio_by_gamma(const Rational& p, const Rational& qq, long dp, long dq) {
    auto beta = [](const Rational& a, const Rational& b) {
        const auto [ga, pa] = half_integer_gamma(a);
        const auto [gb, pb] = half_integer_gamma(b);
        const auto [gs, ps] = half_integer_gamma(a + b);
        return std::pair<Rational, int>{ga * gb / gs, pa + pb - ps};
    };
    const auto [num, pn] = beta(p + Rational(dp), qq + Rational(dq));
    const auto [den, pd] = beta(p, qq);
    if (pn != pd) throw std::logic_error("sqrt(pi) powers do not cancel");
    return num / den;
}

/// Counts maps from m labelled items to k+1 groups with prescribed sizes
/// b_1..b_k for the first k groups.
inline long labelled_assignments(int m, const std::vector<long>& b) {
    if (m < 0) return 0;
    const int groups = static_cast<int>(b.size()) + 1;
    long total_codes = 1;
    for (int s = 0; s < m; ++s) total_codes *= groups;
    long hits = 0;
    for (long code = 0; code < total_codes; ++code) {
        std::vector<long> size(static_cast<std::size_t>(groups), 0);
        long c = code;
        for (int s = 0; s < m; ++s) {
            ++size[static_cast<std::size_t>(c % groups)];
            c /= groups;
        }
        bool ok = true;
        for (std::size_t g = 0; g < b.size(); ++g) ok = ok && size[g] == b[g];
        hits += ok ? 1 : 0;
    }
    return hits;
}

}  // namespace testing_support
