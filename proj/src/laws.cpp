#include "exhd/laws.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "exhd/combinatorics.hpp"

namespace exhd {

struct ExchangeableLaw::Memo {
    std::shared_mutex mutex;
    std::unordered_map<Composition, Rational> values;
};

namespace {

Rational sum(const std::vector<Rational>& v) {
    Rational s;
    for (const auto& x : v) s += x;
    return s;
}

void require_simplex_interior(const std::vector<Rational>& p, const char* what) {
    if (p.size() < 2) throw std::domain_error(std::string(what) + ": need at least two symbols");
    for (const auto& x : p) {
        if (x.sign() <= 0) throw std::domain_error(std::string(what) + ": probabilities must be strictly positive");
    }
    if (sum(p) != 1) throw std::domain_error(std::string(what) + ": probabilities must sum to 1");
}

Rational iid_prob(const std::vector<Rational>& p, const Composition& i) {
    Rational r = 1;
    for (int j = 0; j < i.parts(); ++j) r *= pow(p[static_cast<std::size_t>(j)], static_cast<unsigned long>(i[j]));
    return r;
}

std::string join(const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) s += ",";
        s += v[j].to_string();
    }
    return s;
}

}  // namespace

ExchangeableLaw::ExchangeableLaw(Params params, int k)
    : params_(std::move(params)), k_(k), memo_(std::make_shared<Memo>()) {}

ExchangeableLaw ExchangeableLaw::iid(std::vector<Rational> p) {
    require_simplex_interior(p, "iid");
    const int k = static_cast<int>(p.size());
    return ExchangeableLaw(IidParams{std::move(p)}, k);
}

ExchangeableLaw ExchangeableLaw::polya(std::vector<Rational> alpha) {
    if (alpha.size() < 2) throw std::domain_error("polya: need at least two symbols");
    for (const auto& a : alpha) {
        if (a.sign() <= 0) throw std::domain_error("polya: alpha must be strictly positive");
    }
    const int k = static_cast<int>(alpha.size());
    return ExchangeableLaw(PolyaParams{std::move(alpha)}, k);
}

ExchangeableLaw ExchangeableLaw::hls(int K, Rational pi, Rational nu, std::vector<Rational> alpha) {
    if (K < 3) throw std::domain_error("hls: K must be at least 3");
    if (static_cast<int>(alpha.size()) != K - 2) throw std::domain_error("hls: alpha must have K-2 entries");
    if (pi.sign() <= 0 || nu.sign() <= 0) throw std::domain_error("hls: pi and nu must be positive");
    for (const auto& a : alpha) {
        if (a.sign() <= 0) throw std::domain_error("hls: alpha must be strictly positive");
    }
    if (sum(alpha) >= 1) throw std::domain_error("hls: alpha must sum to less than 1");
    return ExchangeableLaw(HlsParams{K, std::move(pi), std::move(nu), std::move(alpha)}, K);
}

ExchangeableLaw ExchangeableLaw::mixture(std::vector<Rational> weights, std::vector<std::vector<Rational>> components) {
    if (components.empty()) throw std::domain_error("mixture: need at least one component");
    if (weights.size() != components.size()) throw std::domain_error("mixture: one weight per component");
    for (const auto& w : weights) {
        if (w.sign() <= 0) throw std::domain_error("mixture: weights must be strictly positive");
    }
    if (sum(weights) != 1) throw std::domain_error("mixture: weights must sum to 1");
    const std::size_t k = components.front().size();
    for (const auto& c : components) {
        if (c.size() != k) throw std::domain_error("mixture: components must share the alphabet");
        require_simplex_interior(c, "mixture component");
    }
    return ExchangeableLaw(MixtureParams{std::move(weights), std::move(components)}, static_cast<int>(k));
}

LawFamily ExchangeableLaw::family() const { return static_cast<LawFamily>(params_.index()); }

Rational ExchangeableLaw::compute(const Composition& i) const {
    const int n = i.order();
    if (const auto* p = std::get_if<IidParams>(&params_)) return iid_prob(p->p, i);

    if (const auto* p = std::get_if<PolyaParams>(&params_)) {
        Rational num = 1;
        for (int j = 0; j < k_; ++j) num *= rising_factorial(p->alpha[static_cast<std::size_t>(j)], i[j]);
        return num / rising_factorial(sum(p->alpha), n);
    }

    if (const auto* p = std::get_if<HlsParams>(&params_)) {
        // (1-alpha)^{i_K} prod_t alpha_t^{i_{t+1}} B(pi+i_1, nu+n-i_1)/B(pi,nu)
        Rational r = pow(Rational(1) - sum(p->alpha), static_cast<unsigned long>(i[k_ - 1]));
        for (int t = 0; t < k_ - 2; ++t) r *= pow(p->alpha[static_cast<std::size_t>(t)], static_cast<unsigned long>(i[t + 1]));
        return r * beta_ratio(p->pi, p->nu, i[0], n - i[0]);
    }

    const auto& m = std::get<MixtureParams>(params_);
    Rational r;
    for (std::size_t c = 0; c < m.components.size(); ++c) r += m.weights[c] * iid_prob(m.components[c], i);
    return r;
}

Rational ExchangeableLaw::cylinder_prob(const Composition& i) const {
    if (i.parts() != k_) throw std::domain_error("composition " + i.to_string() + " does not match alphabet size " + std::to_string(k_));
    {
        std::shared_lock lock(memo_->mutex);
        if (auto it = memo_->values.find(i); it != memo_->values.end()) return it->second;
    }
    Rational value = compute(i);
    std::unique_lock lock(memo_->mutex);
    return memo_->values.try_emplace(i, std::move(value)).first->second;
}

void ExchangeableLaw::warm(int max_order) const {
    for (int n = 0; n <= max_order; ++n)
        for (const auto& c : compositions(n, k_)) (void)cylinder_prob(c);
}

std::string ExchangeableLaw::spec() const {
    if (const auto* p = std::get_if<IidParams>(&params_)) return "iid:p=" + join(p->p);
    if (const auto* p = std::get_if<PolyaParams>(&params_)) return "polya:alpha=" + join(p->alpha);
    if (const auto* p = std::get_if<HlsParams>(&params_)) {
        return "hls:K=" + std::to_string(p->K) + ",pi=" + p->pi.to_string() + ",nu=" + p->nu.to_string() +
               ",alpha=" + join(p->alpha);
    }
    const auto& m = std::get<MixtureParams>(params_);
    std::string s = "mixture:w=" + join(m.weights);
    for (std::size_t c = 0; c < m.components.size(); ++c) s += ";p" + std::to_string(c + 1) + "=" + join(m.components[c]);
    return s;
}

Rational predictive_prob(const ExchangeableLaw& law, const Composition& h, int j) {
    const Rational base = law.cylinder_prob(h);
    if (base.is_zero()) throw std::domain_error("predictive_prob: conditioning class " + h.to_string() + " has probability zero");
    return law.cylinder_prob(h.plus_unit(j)) / base;
}

Rational conditional_block_prob(const ExchangeableLaw& law, int n, int u, const Composition& a, const Composition& b) {
    if (u < 2) throw std::domain_error("conditional_block_prob requires u >= 2");
    if (a.order() != n || b.order() != n + u - 1) throw std::domain_error("conditional_block_prob: order mismatch");
    const Rational base = law.cylinder_prob(a);
    if (base.is_zero()) throw std::domain_error("conditional_block_prob: conditioning class has probability zero");
    if (!b.dominates(a)) return Rational(0);
    return Rational(multinomial(b - a)) * law.cylinder_prob(b) / base;
}

ConsistencyReport check_consistency(const ExchangeableLaw& law, int n_max) {
    if (n_max < 1) throw std::domain_error("check_consistency requires n_max >= 1");
    ConsistencyReport rep;
    rep.n_max = n_max;
    const int k = law.alphabet_size();
    auto fail = [&](const char* check, const Composition& at, std::string detail) {
        rep.pass = false;
        rep.failed_check = check;
        rep.witness = at;
        rep.detail = std::move(detail);
        return rep;
    };
    for (int n = 0; n <= n_max; ++n) {
        Rational total;
        for (const auto& i : compositions(n, k)) {
            const Rational p = law.cylinder_prob(i);
            if (n >= 1 && p.sign() <= 0) return fail("positivity", i, "P = " + p.to_string());
            Rational next;
            for (int j = 0; j < k; ++j) next += law.cylinder_prob(i.plus_unit(j));
            if (next != p) return fail("kolmogorov", i, "P = " + p.to_string() + ", sum of extensions = " + next.to_string());
            total += Rational(multinomial(i)) * p;
        }
        if (total != 1) return fail("normalization", Composition::zero(k), "order " + std::to_string(n) + " total " + total.to_string());
    }
    return rep;
}

}  // namespace exhd
