#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "exhd/composition.hpp"
#include "exhd/rational.hpp"

namespace exhd {

/// i.i.d. with marginal p (all p_j > 0, sum 1).
struct IidParams {
    std::vector<Rational> p;
};

/// Dirichlet-directed (Polya) sequence with parameter alpha (all > 0).
struct PolyaParams {
    std::vector<Rational> alpha;
};

/// Sequence whose directing measure puts theta_1 ~ Beta(pi, nu) and pins
/// theta_{t+1} = alpha_t (1 - theta_1) for t = 1..K-2.
struct HlsParams {
    int K = 3;
    Rational pi;
    Rational nu;
    std::vector<Rational> alpha;  // K-2 entries, positive, sum < 1
};

/// Finite mixture of i.i.d. laws.
struct MixtureParams {
    std::vector<Rational> weights;
    std::vector<std::vector<Rational>> components;
};

enum class LawFamily { Iid, Polya, Hls, Mixture };

/// An exchangeable law on {d_1..d_K}^infinity with exact cylinder
/// probabilities. Immutable once built; copies share one memo table that
/// is safe for concurrent readers.
class ExchangeableLaw {
public:
    using Params = std::variant<IidParams, PolyaParams, HlsParams, MixtureParams>;

    /// Factories validate the family invariants and throw std::domain_error.
    static ExchangeableLaw iid(std::vector<Rational> p);
    static ExchangeableLaw polya(std::vector<Rational> alpha);
    static ExchangeableLaw hls(int K, Rational pi, Rational nu, std::vector<Rational> alpha);
    static ExchangeableLaw mixture(std::vector<Rational> weights, std::vector<std::vector<Rational>> components);

    LawFamily family() const;
    const Params& params() const { return params_; }
    int alphabet_size() const { return k_; }

    /// Probability of any single sequence whose symbol counts are i.
    Rational cylinder_prob(const Composition& i) const;

    /// Fills the memo for every composition of order <= max_order.
    void warm(int max_order) const;

    /// Canonical law-spec string, e.g. "hls:K=3,pi=1/1,nu=2/1,alpha=1/2".
    std::string spec() const;

private:
    struct Memo;

    ExchangeableLaw(Params params, int k);
    Rational compute(const Composition& i) const;

    Params params_;
    int k_ = 0;
    std::shared_ptr<Memo> memo_;
};

/// P(X_n = d_j | first n-1 counts are h) = P_n(h + e_j) / P_{n-1}(h).
Rational predictive_prob(const ExchangeableLaw& law, const Composition& h, int j);

/// Probability that X_[n+u-1] has counts b given that X_[n] has counts a.
/// Zero when b - a is not an allocation of the u-1 extra coordinates.
Rational conditional_block_prob(const ExchangeableLaw& law, int n, int u, const Composition& a,
                                const Composition& b);

struct ConsistencyReport {
    bool pass = true;
    int n_max = 0;
    std::string failed_check;             // "positivity" | "kolmogorov" | "normalization"
    std::optional<Composition> witness;   // first counterexample, if any
    std::string detail;
};

/// Positivity, Kolmogorov consistency and normalization for all n <= n_max.
ConsistencyReport check_consistency(const ExchangeableLaw& law, int n_max);

}  // namespace exhd
