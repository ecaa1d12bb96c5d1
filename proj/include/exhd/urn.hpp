#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "exhd/composition.hpp"
#include "exhd/laws.hpp"
#include "exhd/rational.hpp"

namespace exhd {

/// Ball counts per color. Counts never decrease; each step adds one ball.
class UrnState {
public:
    /// Throws std::domain_error on a negative count or an empty urn.
    explicit UrnState(std::vector<long> counts);

    int colors() const { return static_cast<int>(counts_.size()); }
    long count(int j) const { return counts_[static_cast<std::size_t>(j)]; }
    long total() const { return total_; }
    const std::vector<long>& counts() const { return counts_; }

    /// Current proportions y_j = count_j / total.
    std::vector<Rational> proportions() const;
    void add(int j);

private:
    std::vector<long> counts_;
    long total_ = 0;
};

/// Polya reinforcement: f(y) = y.
struct IdentityUrn {};
/// i.i.d. draws: f(y) = p for every y.
struct ConstantUrn {
    std::vector<Rational> p;
};
/// f_1(y) = y_1, f_j(y) = alpha_{j-1} (1 - y_1) for j = 2..K-1,
/// f_K(y) = (1 - sum alpha) (1 - y_1).
struct HlsUrn {
    std::vector<Rational> alpha;
};

using UrnFunction = std::variant<IdentityUrn, ConstantUrn, HlsUrn>;

/// Draw probabilities f(y) at the given state; they sum to 1 exactly.
std::vector<Rational> urn_probabilities(const UrnFunction& f, const UrnState& state);

/// Deterministic given (initial, f, steps, seed); sample index selects an
/// independent stream. Colors are 0-based.
std::vector<int> simulate(const UrnState& initial, const UrnFunction& f, int steps, std::uint64_t seed,
                          std::uint64_t sample = 0);

struct ClassEstimate {
    Composition composition;
    std::uint64_t hits = 0;
    double estimate = 0;        // hits / samples
    double standard_error = 0;  // sqrt(estimate (1 - estimate) / samples)
};

struct EmpiricalCylinder {
    int n = 0;
    std::uint64_t samples = 0;
    std::vector<ClassEstimate> classes;  // every class of N(n,K) in composition order; empty when samples == 0
};

/// Frequencies of each count class among `samples` independent length-n
/// prefixes; estimates multinomial(n; i) P_n(i). Samples run in parallel
/// and tallies are merged by addition, so results do not depend on the
/// thread count.
EmpiricalCylinder empirical_cylinder(const UrnState& initial, const UrnFunction& f, int n, std::uint64_t samples,
                                     std::uint64_t seed);

/// Serial reference of empirical_cylinder.
EmpiricalCylinder empirical_cylinder_serial(const UrnState& initial, const UrnFunction& f, int n,
                                            std::uint64_t samples, std::uint64_t seed);

/// The exchangeable law generated by the urn, when it has one in closed form:
/// Identity -> Polya(counts), Constant -> IID(p), HLS -> HLS(pi = count_1,
/// nu = total - count_1, alpha). Throws std::domain_error otherwise.
ExchangeableLaw urn_law(const UrnState& initial, const UrnFunction& f);

struct ClassComparison {
    Composition composition;
    Rational exact;     // multinomial(n; i) P_n(i)
    double estimate = 0;
    double sigma = 0;   // sqrt(exact (1 - exact) / samples)
    double z_score = 0;
    bool within = true;
};

/// Compares every class against the exact law: within means
/// |estimate - exact| <= tolerance * sigma.
std::vector<ClassComparison> compare_exact(const EmpiricalCylinder& est, const ExchangeableLaw& law,
                                           double tolerance = 4.0);

}  // namespace exhd
