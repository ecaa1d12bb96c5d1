#include "exhd/weak_independence.hpp"

#include <stdexcept>

#include "exhd/combinatorics.hpp"
#include "exhd/hoeffding.hpp"

namespace exhd {

std::vector<SymmetricKernel> xi_null_space(const ExchangeableLaw& law, int n) {
    if (n < 2) throw std::domain_error("Xi_n is defined for n >= 2");
    std::vector<SymmetricKernel> out;
    for (auto& v : null_space(conditional_expectation_matrix(law, n))) out.emplace_back(n, law.alphabet_size(), std::move(v));
    return out;
}

Rational shifted_symmetrization_numerator(const ExchangeableLaw& law, int n, int u, const Composition& z,
                                          const SymmetricKernel& phi) {
    const int K = law.alphabet_size();
    if (u < 2 || u > n) throw std::domain_error("shifted symmetrization needs 2 <= u <= n");
    if (z.order() != n - 1 || z.parts() != K) throw std::domain_error("z must be a composition of n-1");
    if (phi.order() != n) throw std::domain_error("kernel order must equal n");

    const Rational pz = law.cylinder_prob(z);
    const auto draws = compositions(u, K);  // counts of the u unobserved X_1..X_u
    Rational total;
    for (const auto& k : compositions(n - u, K)) {
        if (!z.dominates(k)) continue;
        // E(phi(X_[n]) | X_[u+1,u+n-1] = x), x having k in its first n-u slots.
        Rational cond;
        for (const auto& q : draws) {
            const Rational& f = phi.at(k + q);
            if (f.is_zero()) continue;
            cond += Rational(multinomial(q)) * f * law.cylinder_prob(z + q);
        }
        cond /= pz;
        total += Rational(multinomial(k) * multinomial(z - k)) * cond;
    }
    return total;
}

namespace {

struct Item {
    std::size_t basis;
    int u;
};

std::optional<OracleWitness> check_item(const ExchangeableLaw& law, int n, const std::vector<SymmetricKernel>& basis,
                                        const Item& it) {
    for (const auto& z : compositions(n - 1, law.alphabet_size())) {
        const Rational num = shifted_symmetrization_numerator(law, n, it.u, z, basis[it.basis]);
        if (!num.is_zero()) {
            // The symmetrization weights sum to multinomial(z).
            return OracleWitness{it.basis, basis[it.basis], it.u, z, num / Rational(multinomial(z))};
        }
    }
    return std::nullopt;
}

OracleResult run(const ExchangeableLaw& law, int n, bool parallel) {
    if (n < 2) throw std::domain_error("weak independence is checked for n >= 2");
    law.warm(2 * n - 1);
    OracleResult res;
    res.n = n;
    const auto basis = xi_null_space(law, n);
    res.xi_dimension = basis.size();

    std::vector<Item> items;
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (int u = 2; u <= n; ++u) items.push_back({b, u});

    std::vector<std::optional<OracleWitness>> found(items.size());
    const auto count = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long t = 0; t < count; ++t) found[static_cast<std::size_t>(t)] = check_item(law, n, basis, items[static_cast<std::size_t>(t)]);

    for (auto& w : found) {
        if (w) {
            res.weakly_independent = false;
            res.witness = std::move(w);
            break;
        }
    }
    return res;
}

}  // namespace

OracleResult weak_independence_oracle(const ExchangeableLaw& law, int n) { return run(law, n, true); }

OracleResult weak_independence_oracle_serial(const ExchangeableLaw& law, int n) { return run(law, n, false); }

}  // namespace exhd
