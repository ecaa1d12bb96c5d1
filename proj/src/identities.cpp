#include "exhd/identities.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "exhd/combinatorics.hpp"
#include "exhd/composition.hpp"

namespace exhd {

namespace {

// B(pi+z+q, nu+n+u-1-z-q) / B(pi+k+q, nu+n-k-q), both normalized by B(pi, nu).
Rational shifted_beta_quotient(const Rational& pi, const Rational& nu, int n, int u, int z, int k, int q) {
    return beta_ratio(pi, nu, z + q, n + u - 1 - z - q) / beta_ratio(pi, nu, k + q, n - k - q);
}

template <class Describe>
void record(IdentityReport& rep, bool ok, Describe&& describe) {
    ++rep.checked;
    if (ok) return;
    if (rep.failures++ == 0) {
        std::ostringstream os;
        describe(os);
        rep.first_failure = os.str();
    }
}

}  // namespace

Rational sommedentro_sum(const Rational& pi, const Rational& nu, int n, int u, int z, int k) {
    if (pi.sign() <= 0 || nu.sign() <= 0) throw std::domain_error("sommedentro_sum needs pi, nu > 0");
    if (n < 2 || u < 2 || u > n || z < 0 || z > n - 1) throw std::domain_error("sommedentro_sum: (n, u, z) out of range");
    if (k < std::max(0, z - (u - 1)) || k > std::min(z, n - u)) throw std::domain_error("sommedentro_sum: k out of range");
    Rational total;
    for (int q = 0; q <= u; ++q) {
        Rational term = Rational(binom_star(u, q)) * shifted_beta_quotient(pi, nu, n, u, z, k, q);
        if (q % 2) total -= term;
        else total += term;
    }
    return total;
}

SigmaForms sigma_hls(const Rational& pi, const Rational& nu, int n, int u, int m, int z1, int k1, int k2) {
    SigmaForms out;
    for (int q1 = 0; q1 <= u; ++q1) {
        const Rational quotient = shifted_beta_quotient(pi, nu, n, u, z1, k1, q1);
        Integer weight = 0;
        for (int q2 = 0; q2 <= u - q1; ++q2) {
            const std::array<long, 2> b{q1, q2};
            weight += multinomial_star(u, b) * binom_star(k1 + q1, m - k2 - q2);
        }
        Rational term = Rational(weight) * quotient;
        if (q1 % 2) out.direct -= term;
        else out.direct += term;
    }
    out.factored = Rational(binom_star(k1 + u, m - k2)) * sommedentro_sum(pi, nu, n, u, z1, k1);
    return out;
}

std::pair<Integer, Integer> star_vandermonde(int u, int q1, int k1, int j) {
    if (q1 < 0 || q1 > u || k1 < 0) throw std::domain_error("star_vandermonde needs 0 <= q1 <= u and k1 >= 0");
    Integer summed = 0;
    for (int q2 = 0; q2 <= u - q1; ++q2) summed += binom_star(u - q1, q2) * binom_star(k1 + q1, j - q2);
    return {summed, binom_star(k1 + u, j)};
}

IdentityReport check_sommedentro(const std::vector<std::pair<Rational, Rational>>& params, int n_max) {
    IdentityReport rep;
    rep.name = "sommedentro";
    for (const auto& [pi, nu] : params)
        for (int n = 2; n <= n_max; ++n)
            for (int u = 2; u <= n; ++u)
                for (int z = 0; z <= n - 1; ++z)
                    for (int k = std::max(0, z - (u - 1)); k <= std::min(z, n - u); ++k) {
                        const Rational v = sommedentro_sum(pi, nu, n, u, z, k);
                        record(rep, v.is_zero(), [&](std::ostream& os) {
                            os << "pi=" << pi << " nu=" << nu << " n=" << n << " u=" << u << " z=" << z << " k=" << k << " value=" << v;
                        });
                    }
    return rep;
}

IdentityReport check_sigma(const std::vector<std::pair<Rational, Rational>>& params, int n_max) {
    IdentityReport rep;
    rep.name = "sigma";
    for (const auto& [pi, nu] : params)
        for (int n = 2; n <= n_max; ++n)
            for (int u = 2; u <= n; ++u)
                for (int m = 0; m <= n; ++m)
                    for (int z1 = 0; z1 <= n - 1; ++z1)
                        for (int z2 = 0; z1 + z2 <= n - 1; ++z2)
                            for (int k1 = std::max(0, z1 - (u - 1)); k1 <= std::min(z1, n - u); ++k1)
                                for (int k2 = std::max(0, z2 - (u - 1) + (z1 - k1)); k2 <= std::min(z2, n - u - k1); ++k2) {
                                    const auto s = sigma_hls(pi, nu, n, u, m, z1, k1, k2);
                                    record(rep, s.direct == s.factored && s.direct.is_zero(), [&](std::ostream& os) {
                                        os << "pi=" << pi << " nu=" << nu << " n=" << n << " u=" << u << " m=" << m << " z1=" << z1
                                       << " k1=" << k1 << " k2=" << k2 << " direct=" << s.direct << " factored=" << s.factored;
                                    });
                                }
    return rep;
}

IdentityReport check_star_vandermonde(int u_max, int k1_max, int j_min, int j_max) {
    IdentityReport rep;
    rep.name = "star-vandermonde";
    for (int u = 0; u <= u_max; ++u)
        for (int q1 = 0; q1 <= u; ++q1)
            for (int k1 = 0; k1 <= k1_max; ++k1)
                for (int j = j_min; j <= j_max; ++j) {
                    const auto [lhs, rhs] = star_vandermonde(u, q1, k1, j);
                    record(rep, lhs == rhs, [&](std::ostream& os) {
                        os << "u=" << u << " q1=" << q1 << " k1=" << k1 << " j=" << j << " sum=" << lhs << " closed=" << rhs;
                    });
                }
    return rep;
}

IdentityReport check_pascal_star(int a_max, int b_min, int b_max) {
    IdentityReport rep;
    rep.name = "pascal-star";
    for (int a = 1; a <= a_max; ++a)
        for (int b = b_min; b <= b_max; ++b) {
            const Integer lhs = binom_star(a, b);
            const Integer rhs = binom_star(a - 1, b) + binom_star(a - 1, b - 1);
            record(rep, lhs == rhs, [&](std::ostream& os) {
                os << "a=" << a << " b=" << b << " lhs=" << lhs << " rhs=" << rhs;
            });
        }
    return rep;
}

IdentityReport check_quandebello(int n_max, int k_max) {
    IdentityReport rep;
    rep.name = "quandebello";
    for (int K = 1; K <= k_max; ++K)
        for (int n = 1; n <= n_max; ++n) {
            std::uint64_t with_first = 0;
            for (const auto& i : compositions(n, K)) with_first += i[0] >= 1 ? 1 : 0;
            const std::uint64_t smaller = compositions(n - 1, K).size();
            record(rep, with_first == smaller, [&](std::ostream& os) {
                os << "n=" << n << " K=" << K << " lhs=" << with_first << " rhs=" << smaller;
            });
        }
    return rep;
}

std::vector<std::pair<Rational, Rational>> default_beta_grid() {
    const std::array<Rational, 5> values{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)};
    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& a : values)
        for (const auto& b : values) out.emplace_back(a, b);
    return out;
}

}  // namespace exhd
