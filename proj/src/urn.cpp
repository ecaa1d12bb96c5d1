#include "exhd/urn.hpp"

#include <cmath>
#include <stdexcept>

#include "exhd/combinatorics.hpp"

namespace exhd {

UrnState::UrnState(std::vector<long> counts) : counts_(std::move(counts)) {
    if (counts_.size() < 2) throw std::domain_error("an urn needs at least two colors");
    for (long c : counts_) {
        if (c < 0) throw std::domain_error("urn counts must be non-negative");
        total_ += c;
    }
    if (total_ == 0) throw std::domain_error("an urn needs at least one ball");
}

std::vector<Rational> UrnState::proportions() const {
    std::vector<Rational> y;
    y.reserve(counts_.size());
    for (long c : counts_) y.emplace_back(c, total_);
    return y;
}

void UrnState::add(int j) {
    ++counts_.at(static_cast<std::size_t>(j));
    ++total_;
}

std::vector<Rational> urn_probabilities(const UrnFunction& f, const UrnState& state) {
    const int K = state.colors();
    if (std::holds_alternative<IdentityUrn>(f)) return state.proportions();
    if (const auto* c = std::get_if<ConstantUrn>(&f)) {
        if (static_cast<int>(c->p.size()) != K) throw std::domain_error("constant urn: p does not match the colors");
        return c->p;
    }
    const auto& h = std::get<HlsUrn>(f);
    if (static_cast<int>(h.alpha.size()) != K - 2) throw std::domain_error("hls urn: alpha needs K-2 entries");
    const Rational y1(state.count(0), state.total());
    const Rational rest = Rational(1) - y1;
    std::vector<Rational> out{y1};
    Rational alpha_sum;
    for (const auto& a : h.alpha) {
        out.push_back(a * rest);
        alpha_sum += a;
    }
    out.push_back((Rational(1) - alpha_sum) * rest);
    return out;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Counter-based stream: one 64-bit word per (seed, sample, step, word index).
std::uint64_t keyed_word(std::uint64_t seed, std::uint64_t sample, std::uint64_t step, std::uint64_t index) {
    std::uint64_t h = mix(seed);
    h = mix(h ^ sample);
    h = mix(h ^ (step * 0xd1b54a32d192ed03ull));
    return mix(h ^ (index * 0x8cb92ba72f3d8dd7ull));
}

// Uniform integer in [0, bound) by rejection on the bit length of bound.
Integer uniform_below(const Integer& bound, std::uint64_t seed, std::uint64_t sample, std::uint64_t step) {
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    std::uint64_t index = 0;
    while (true) {
        Integer r = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t word = keyed_word(seed, sample, step, index++);
            const std::size_t keep = (w + 1 == words) ? bits - 64 * w : 64;
            if (keep < 64) word &= (std::uint64_t{1} << keep) - 1;
            r <<= 64;
            mpz_class piece;
            mpz_import(piece.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
            r += piece;
        }
        if (r < bound) return r;
    }
}

int draw_color(const std::vector<Rational>& probs, std::uint64_t seed, std::uint64_t sample, std::uint64_t step) {
    Integer den = 1;
    for (const auto& p : probs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.raw().get_den_mpz_t());
    const Integer r = uniform_below(den, seed, sample, step);
    Integer cumulative = 0;
    for (std::size_t j = 0; j < probs.size(); ++j) {
        cumulative += probs[j].numerator() * (den / probs[j].denominator());
        if (r < cumulative) return static_cast<int>(j);
    }
    throw std::logic_error("urn probabilities do not sum to one");
}

}  // namespace

std::vector<int> simulate(const UrnState& initial, const UrnFunction& f, int steps, std::uint64_t seed,
                          std::uint64_t sample) {
    if (steps < 0) throw std::domain_error("simulate needs steps >= 0");
    UrnState state = initial;
    std::vector<int> colors;
    colors.reserve(static_cast<std::size_t>(steps));
    for (int s = 0; s < steps; ++s) {
        const int c = draw_color(urn_probabilities(f, state), seed, sample, static_cast<std::uint64_t>(s));
        state.add(c);
        colors.push_back(c);
    }
    return colors;
}

namespace {

EmpiricalCylinder estimate(const UrnState& initial, const UrnFunction& f, int n, std::uint64_t samples,
                           std::uint64_t seed, bool parallel) {
    if (n < 0) throw std::domain_error("empirical_cylinder needs n >= 0");
    const int K = initial.colors();
    (void)urn_probabilities(f, initial);  // validate the urn shape up front
    const auto classes = compositions(n, K);
    std::vector<std::uint64_t> hits(classes.size(), 0);

    const auto total = static_cast<long long>(samples);
#pragma omp parallel if (parallel)
    {
        std::vector<std::uint64_t> local(classes.size(), 0);
#pragma omp for schedule(static)
        for (long long s = 0; s < total; ++s) {
            std::vector<int> counts(static_cast<std::size_t>(K), 0);
            for (int c : simulate(initial, f, n, seed, static_cast<std::uint64_t>(s))) ++counts[static_cast<std::size_t>(c)];
            ++local[composition_rank(Composition(std::move(counts)))];
        }
#pragma omp critical
        for (std::size_t r = 0; r < hits.size(); ++r) hits[r] += local[r];
    }

    EmpiricalCylinder out;
    out.n = n;
    out.samples = samples;
    if (samples == 0) return out;
    for (std::size_t r = 0; r < classes.size(); ++r) {
        ClassEstimate e;
        e.composition = classes[r];
        e.hits = hits[r];
        if (samples > 0) {
            e.estimate = static_cast<double>(hits[r]) / static_cast<double>(samples);
            e.standard_error = std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(samples));
        }
        out.classes.push_back(std::move(e));
    }
    return out;
}

}  // namespace

EmpiricalCylinder empirical_cylinder(const UrnState& initial, const UrnFunction& f, int n, std::uint64_t samples,
                                     std::uint64_t seed) {
    return estimate(initial, f, n, samples, seed, true);
}

EmpiricalCylinder empirical_cylinder_serial(const UrnState& initial, const UrnFunction& f, int n,
                                            std::uint64_t samples, std::uint64_t seed) {
    return estimate(initial, f, n, samples, seed, false);
}

ExchangeableLaw urn_law(const UrnState& initial, const UrnFunction& f) {
    if (std::holds_alternative<IdentityUrn>(f)) {
        std::vector<Rational> alpha;
        for (long c : initial.counts()) alpha.emplace_back(c);
        return ExchangeableLaw::polya(std::move(alpha));
    }
    if (const auto* c = std::get_if<ConstantUrn>(&f)) return ExchangeableLaw::iid(c->p);
    const auto& h = std::get<HlsUrn>(f);
    return ExchangeableLaw::hls(initial.colors(), Rational(initial.count(0)), Rational(initial.total() - initial.count(0)),
                                h.alpha);
}

std::vector<ClassComparison> compare_exact(const EmpiricalCylinder& est, const ExchangeableLaw& law, double tolerance) {
    std::vector<ClassComparison> out;
    for (const auto& e : est.classes) {
        ClassComparison c;
        c.composition = e.composition;
        c.exact = Rational(multinomial(e.composition)) * law.cylinder_prob(e.composition);
        c.estimate = e.estimate;
        const double p = c.exact.to_double();
        if (est.samples > 0) {
            c.sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(est.samples));
            const double diff = std::abs(c.estimate - p);
            c.z_score = c.sigma > 0 ? diff / c.sigma : (diff == 0 ? 0.0 : INFINITY);
            c.within = diff <= tolerance * c.sigma;
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace exhd
