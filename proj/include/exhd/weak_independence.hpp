#pragma once

#include <optional>
#include <vector>

#include "exhd/laws.hpp"
#include "exhd/statistic.hpp"

namespace exhd {

/// Basis of Xi_n = { phi symmetric on D^n : E(phi(X_[n]) | X_[2,n]) = 0 },
/// obtained as the exact null space of the conditional-expectation map.
std::vector<SymmetricKernel> xi_null_space(const ExchangeableLaw& law, int n);

/// Numerator of the canonical symmetrization of
///   [phi]^{(n-u)}_{n,n-1}(x) = E(phi(X_[n]) | X_[u+1,u+n-1] = x)
/// over the class of x with counts z (order n-1): the sum over first-block
/// counts k <= z (|k| = n-u) of multinomial(k) multinomial(z-k) times the
/// conditional expectation at (k, z-k). The symmetrization vanishes iff this does.
Rational shifted_symmetrization_numerator(const ExchangeableLaw& law, int n, int u, const Composition& z,
                                          const SymmetricKernel& phi);

struct OracleWitness {
    std::size_t basis_index = 0;
    SymmetricKernel phi;
    int u = 0;
    Composition z;
    Rational value;  // symmetrized conditional expectation at z
};

struct OracleResult {
    int n = 0;
    bool weakly_independent = true;
    std::size_t xi_dimension = 0;
    std::optional<OracleWitness> witness;  // first failing (basis, u, z) in enumeration order
};

/// Brute-force check of Xi_n inside every symmetrized shifted space, u = 2..n.
/// Work items (basis kernel, u) run in parallel; the reported witness is the
/// first in (basis, u, z) order, independent of scheduling.
OracleResult weak_independence_oracle(const ExchangeableLaw& law, int n);

/// Serial reference of the above.
OracleResult weak_independence_oracle_serial(const ExchangeableLaw& law, int n);

}  // namespace exhd
