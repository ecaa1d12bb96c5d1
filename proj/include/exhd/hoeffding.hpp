#pragma once

#include <optional>
#include <vector>

#include "exhd/laws.hpp"
#include "exhd/statistic.hpp"

namespace exhd {

/// Orthogonal basis of L_s(X_[n]) adapted to the filtration
/// SU_0 c SU_1 c ... c SU_n: layer k spans SH_k = SU_k minus SU_{k-1}.
///
/// Built once per (law, n) by exact Gram-Schmidt on the U-statistic
/// generators, then reused for any number of projections.
class HoeffdingBasis {
public:
    HoeffdingBasis(const ExchangeableLaw& law, int n);

    int order() const { return n_; }
    const ExchangeableLaw& law() const { return law_; }

    /// dim SH_k for k = 0..n.
    std::vector<std::size_t> dims() const;

    /// [F_0, ..., F_n] with F_k the orthogonal projection of t on SH_k.
    std::vector<SymmetricStatistic> decompose(const SymmetricStatistic& t) const;

    const std::vector<SymmetricStatistic>& layer(int k) const { return layers_.at(static_cast<std::size_t>(k)); }

private:
    ExchangeableLaw law_;
    int n_;
    Vector weights_;  // multinomial(i) P_n(i)
    std::vector<std::vector<SymmetricStatistic>> layers_;
    std::vector<std::vector<Rational>> norms_;
};

std::vector<SymmetricStatistic> decompose(const ExchangeableLaw& law, int n, const SymmetricStatistic& t);

/// dim SH_k(X_[n]) for k = 0..n.
std::vector<std::size_t> sh_dims(const ExchangeableLaw& law, int n);

/// A kernel phi of order k with u_statistic(phi, n) == f: the minimum
/// Euclidean-norm solution phi = U^T y, (U U^T) y = f.
/// Throws std::domain_error when f is not in SU_k.
SymmetricKernel kernel_for(const ExchangeableLaw& law, int n, const SymmetricStatistic& f, int k);

/// A completely degenerate kernel of order k whose U-statistic is f, if one exists.
std::optional<SymmetricKernel> degenerate_kernel_for(const ExchangeableLaw& law, int n, const SymmetricStatistic& f, int k);

/// Linear map phi -> E(phi(X_[k]) | X_[2,k]) on class functions:
/// rows N(k-1,K), columns N(k,K), entry predictive_prob(h, j) at column h + e_j.
Matrix conditional_expectation_matrix(const ExchangeableLaw& law, int k);

struct DegeneracyVerdict {
    bool degenerate = true;
    std::optional<Composition> violating;  // h in N(k-1,K)
    Rational residual;
};

/// Whether E(phi(X_[k]) | X_[2,k]) = 0, checked on every class h of order k-1.
DegeneracyVerdict is_completely_degenerate(const ExchangeableLaw& law, const SymmetricKernel& phi);

}  // namespace exhd
