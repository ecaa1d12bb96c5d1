#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exhd/composition.hpp"
#include "exhd/laws.hpp"
#include "exhd/statistic.hpp"

namespace exhd {

/// Shift on a reduced count vector v = (i_1..i_{K-1}) (K = v.size() + 1,
/// the K-th count implicit): subtract one at l and, when p <= K-1, add one
/// at p. Indices are 1-based with 1 <= l < p <= K. Throws when v_l == 0.
std::vector<int> mu_shift(int l, int p, std::vector<int> v);

/// dim Xi_n = C(n+K-1, K-1) - C(n+K-2, K-1).
std::uint64_t xi_dimension(int n, int K);

/// Closed-form element of Xi_n indexed by m in N(a, K-2), a <= n:
///   phi(i) = (-1)^{i_1} multinomial*(i_1; m_1-i_2, .., m_{K-2}-i_{K-1}) P_n(0,m) / P_n(i).
SymmetricKernel xi_basis_kernel(const ExchangeableLaw& law, int n, const Composition& m);

/// All indices m of the closed-form basis, in enumeration order.
std::vector<Composition> xi_basis_indices(int n, int K);

/// Recovers the unique phi in Xi_n from its values on the boundary
/// classes (0, m_1, .., m_{K-2}) by iterating
///   phi(i) = -1/P_n(i) sum_{j=2..K} phi P_n(mu_1^j(i))
/// until the first count reaches zero.
SymmetricKernel xi_extend_from_boundary(const ExchangeableLaw& law, int n,
                                        const std::function<Rational(const Composition& m)>& boundary);

/// The (m, v, z)-coherent first-block counts: every k in N(v,K) that fits
/// inside z (|z| = m), generated by the chained bounds
///   max(0, z_p - (m-v) + sum_{s<p}(z_s-k_s)) <= k_p <= min(z_p, v - sum_{s<p} k_s).
std::vector<Composition> coherent_vectors(int m, int v, const Composition& z);

/// Values of a function on D^m that is symmetric separately in the first v
/// and the last m-v arguments: f(first-block counts, second-block counts).
using BiSymmetricTable = std::function<Rational(const Composition& first, const Composition& second)>;

/// Canonical symmetrization of f at the class z (|z| = m), as a weighted
/// average over coherent splits with weights multinomial(k) multinomial(z-k).
Rational symmetrize_bisym(const BiSymmetricTable& f, int m, int v, const Composition& z);

/// The Hoeffding-decomposability criterion at one tuple (n, u, z, m):
///   sum_k (-1)^{k_1} multinomial(n-u; k)
///     sum_q (-1)^{q_1} multinomial(u; q) multinomial*(k_1+q_1; m - k_{2..} - q_{2..})
///           P^n_{n+u-1}(z+q | k+q),
/// k over (n-1, n-u, z)-coherent vectors, q over N(u, K) (last count implicit).
/// Requires K >= 3 and 2 <= u <= n.
Rational characterization_sum(const ExchangeableLaw& law, int n, int u, const Composition& z, const Composition& m);

struct VerificationEntry {
    int n = 0;
    int u = 0;
    Composition z;  // order n-1, K parts
    Composition m;  // K-2 parts, order <= n
    Rational value;
};

struct VerificationReport {
    std::string law;
    int n_max = 0;
    std::vector<VerificationEntry> entries;
    bool all_zero = true;
    std::optional<VerificationEntry> first_nonzero;

    /// Whether every entry at order n is zero.
    bool all_zero_at(int n) const;
};

/// Evaluates characterization_sum over every n in [2, n_max], u in [2, n],
/// z in N(n-1,K), m in the union of N(a,K-2), a <= n. Tuples are evaluated
/// in parallel and merged in enumeration order.
VerificationReport verify_hd(const ExchangeableLaw& law, int n_max);

/// Serial reference of verify_hd.
VerificationReport verify_hd_serial(const ExchangeableLaw& law, int n_max);

}  // namespace exhd
