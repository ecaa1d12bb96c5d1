#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "exhd/rational.hpp"

namespace exhd {

/// sum_{q=0}^{u} (-1)^q C(u,q) B(pi+z+q, nu+n+u-1-z-q) / B(pi+k+q, nu+n-k-q),
/// both Beta values taken relative to B(pi, nu). Vanishes identically for
/// valid arguments. Requires pi, nu > 0, 2 <= u <= n, 0 <= z <= n-1 and
/// max(0, z-(u-1)) <= k <= min(z, n-u); throws std::domain_error otherwise.
Rational sommedentro_sum(const Rational& pi, const Rational& nu, int n, int u, int z, int k);

struct SigmaForms {
    Rational direct;    // the double (q1, q2) sum
    Rational factored;  // C*(k1+u, m-k2) times the single q1 sum
};

/// The K = 3 inner sum sigma(n, u, m, z1, k1, k2) in both of its forms.
SigmaForms sigma_hls(const Rational& pi, const Rational& nu, int n, int u, int m, int z1, int k1, int k2);

/// (sum_{q2=0}^{u-q1} C(u-q1, q2) C*(k1+q1, j-q2),  C*(k1+u, j)).
std::pair<Integer, Integer> star_vandermonde(int u, int q1, int k1, int j);

/// Outcome of an exhaustive identity grid.
struct IdentityReport {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first_failure;  // human-readable tuple, empty if none

    bool holds() const { return failures == 0; }
};

/// sommedentro_sum == 0 over all valid (n <= n_max, u, z, k) for each (pi, nu).
IdentityReport check_sommedentro(const std::vector<std::pair<Rational, Rational>>& params, int n_max);

/// Both sigma forms agree and vanish over every valid K = 3 tuple with n <= n_max.
IdentityReport check_sigma(const std::vector<std::pair<Rational, Rational>>& params, int n_max);

/// Star Vandermonde equality for u <= u_max, 0 <= q1 <= u, k1 <= k1_max, j in [j_min, j_max].
IdentityReport check_star_vandermonde(int u_max, int k1_max, int j_min, int j_max);

/// C*(a,b) = C*(a-1,b) + C*(a-1,b-1) for 1 <= a <= a_max, b in [b_min, b_max].
IdentityReport check_pascal_star(int a_max, int b_min, int b_max);

/// |{i in N(n,K) : i_1 >= 1}| = |N(n-1,K)| for 1 <= n <= n_max, 1 <= K <= k_max,
/// counted by enumeration.
IdentityReport check_quandebello(int n_max, int k_max);

/// The grid {1/2, 1, 3/2, 2, 5/2}^2.
std::vector<std::pair<Rational, Rational>> default_beta_grid();

}  // namespace exhd
