#include "exhd/hoeffding.hpp"

#include <stdexcept>

#include "exhd/combinatorics.hpp"

namespace exhd {

namespace {

Rational weighted_dot(const Vector& w, const Vector& a, const Vector& b) {
    Rational acc;
    for (std::size_t r = 0; r < w.size(); ++r) {
        if (!a[r].is_zero() && !b[r].is_zero()) acc += w[r] * a[r] * b[r];
    }
    return acc;
}

}  // namespace

HoeffdingBasis::HoeffdingBasis(const ExchangeableLaw& law, int n) : law_(law), n_(n) {
    if (n < 1) throw std::domain_error("HoeffdingBasis requires n >= 1");
    const auto dom = compositions(n, law.alphabet_size());
    weights_.reserve(dom.size());
    for (const auto& i : dom) {
        Rational p = law.cylinder_prob(i);
        if (p.sign() <= 0) throw std::domain_error("HoeffdingBasis requires a strictly positive law");
        weights_.push_back(Rational(multinomial(i)) * p);
    }

    layers_.resize(static_cast<std::size_t>(n) + 1);
    norms_.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        for (auto v : su_basis(law, n, k)) {
            Vector x = v.values();
            for (int prev = 0; prev <= k; ++prev) {
                const auto& lay = layers_[static_cast<std::size_t>(prev)];
                const auto& nrm = norms_[static_cast<std::size_t>(prev)];
                for (std::size_t e = 0; e < lay.size(); ++e) {
                    const Rational c = weighted_dot(weights_, x, lay[e].values());
                    if (c.is_zero()) continue;
                    const Rational s = c / nrm[e];
                    for (std::size_t r = 0; r < x.size(); ++r) x[r] -= s * lay[e][r];
                }
            }
            if (is_zero(x)) continue;
            Rational norm = weighted_dot(weights_, x, x);
            layers_[static_cast<std::size_t>(k)].emplace_back(n, law.alphabet_size(), std::move(x));
            norms_[static_cast<std::size_t>(k)].push_back(std::move(norm));
        }
    }
}

std::vector<std::size_t> HoeffdingBasis::dims() const {
    std::vector<std::size_t> d;
    for (const auto& l : layers_) d.push_back(l.size());
    return d;
}

std::vector<SymmetricStatistic> HoeffdingBasis::decompose(const SymmetricStatistic& t) const {
    if (t.order() != n_ || t.alphabet_size() != law_.alphabet_size()) throw std::domain_error("decompose: statistic shape mismatch");
    std::vector<SymmetricStatistic> parts;
    for (std::size_t k = 0; k < layers_.size(); ++k) {
        SymmetricStatistic fk(n_, law_.alphabet_size());
        for (std::size_t e = 0; e < layers_[k].size(); ++e) {
            const Rational c = weighted_dot(weights_, t.values(), layers_[k][e].values());
            if (c.is_zero()) continue;
            SymmetricStatistic term = layers_[k][e];
            term *= c / norms_[k][e];
            fk += term;
        }
        parts.push_back(std::move(fk));
    }
    return parts;
}

std::vector<SymmetricStatistic> decompose(const ExchangeableLaw& law, int n, const SymmetricStatistic& t) {
    return HoeffdingBasis(law, n).decompose(t);
}

std::vector<std::size_t> sh_dims(const ExchangeableLaw& law, int n) { return HoeffdingBasis(law, n).dims(); }

SymmetricKernel kernel_for(const ExchangeableLaw& law, int n, const SymmetricStatistic& f, int k) {
    if (f.order() != n || f.alphabet_size() != law.alphabet_size()) throw std::domain_error("kernel_for: statistic shape mismatch");
    const Matrix u = u_statistic_matrix(k, n, law.alphabet_size());
    const Matrix ut = u.transpose();
    const auto y = solve(u * ut, f.values());
    if (!y) throw std::domain_error("kernel_for: statistic is not a U-statistic of order " + std::to_string(k));
    return SymmetricKernel(k, law.alphabet_size(), ut.apply(*y));
}

Matrix conditional_expectation_matrix(const ExchangeableLaw& law, int k) {
    if (k < 1) throw std::domain_error("conditional expectation needs order >= 1");
    const int K = law.alphabet_size();
    const auto rows = compositions(k - 1, K);
    Matrix m(rows.size(), composition_count(k, K));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int j = 0; j < K; ++j) {
            const Composition target = rows[r].plus_unit(j);
            m(r, composition_rank(target)) = predictive_prob(law, rows[r], j);
        }
    }
    return m;
}

std::optional<SymmetricKernel> degenerate_kernel_for(const ExchangeableLaw& law, int n, const SymmetricStatistic& f, int k) {
    if (k < 1) throw std::domain_error("degenerate kernels have order >= 1");
    const Matrix u = u_statistic_matrix(k, n, law.alphabet_size());
    const Matrix d = conditional_expectation_matrix(law, k);
    Matrix stacked(u.rows() + d.rows(), u.cols());
    Vector rhs(stacked.rows());
    for (std::size_t r = 0; r < u.rows(); ++r) {
        for (std::size_t c = 0; c < u.cols(); ++c) stacked(r, c) = u(r, c);
        rhs[r] = f[r];
    }
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) stacked(u.rows() + r, c) = d(r, c);
    auto x = solve(stacked, rhs);
    if (!x) return std::nullopt;
    return SymmetricKernel(k, law.alphabet_size(), std::move(*x));
}

DegeneracyVerdict is_completely_degenerate(const ExchangeableLaw& law, const SymmetricKernel& phi) {
    if (phi.order() < 1) throw std::domain_error("complete degeneracy needs a kernel of order >= 1");
    if (phi.alphabet_size() != law.alphabet_size()) throw std::domain_error("kernel alphabet mismatch");
    const int K = law.alphabet_size();
    DegeneracyVerdict v;
    for (const auto& h : compositions(phi.order() - 1, K)) {
        Rational acc;
        for (int j = 0; j < K; ++j) acc += predictive_prob(law, h, j) * phi.at(h.plus_unit(j));
        if (!acc.is_zero()) {
            v.degenerate = false;
            v.violating = h;
            v.residual = acc;
            return v;
        }
    }
    return v;
}

}  // namespace exhd
