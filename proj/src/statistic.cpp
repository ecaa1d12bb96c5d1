#include "exhd/statistic.hpp"

#include "exhd/combinatorics.hpp"

namespace exhd {

namespace {

// prod_j C(i_j, c_j), zero unless c <= i.
Integer sub_multiset_count(const Composition& i, const Composition& c) {
    Integer r = 1;
    for (int j = 0; j < i.parts(); ++j) {
        r *= binom_star(i[j], c[j]);
        if (r == 0) break;
    }
    return r;
}

}  // namespace

Matrix u_statistic_matrix(int k, int n, int alphabet) {
    if (k > n || k < 0) throw std::domain_error("u_statistic requires 0 <= k <= n");
    const auto rows = compositions(n, alphabet);
    const auto cols = compositions(k, alphabet);
    Matrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = Rational(sub_multiset_count(rows[r], cols[c]));
    return m;
}

SymmetricStatistic u_statistic(const SymmetricKernel& phi, int n) {
    const Matrix m = u_statistic_matrix(phi.order(), n, phi.alphabet_size());
    return SymmetricStatistic(n, phi.alphabet_size(), m.apply(phi.values()));
}

Rational inner_product(const ExchangeableLaw& law, const SymmetricStatistic& t1, const SymmetricStatistic& t2) {
    if (t1.order() != t2.order() || t1.alphabet_size() != t2.alphabet_size()) {
        throw std::domain_error("inner_product: statistics of different orders");
    }
    if (t1.alphabet_size() != law.alphabet_size()) throw std::domain_error("inner_product: alphabet mismatch");
    const auto dom = t1.domain();
    Rational acc;
    for (std::size_t r = 0; r < dom.size(); ++r) {
        if (t1[r].is_zero() || t2[r].is_zero()) continue;
        acc += Rational(multinomial(dom[r])) * law.cylinder_prob(dom[r]) * t1[r] * t2[r];
    }
    return acc;
}

std::vector<SymmetricStatistic> su_basis(const ExchangeableLaw& law, int n, int k) {
    const int K = law.alphabet_size();
    const Matrix m = u_statistic_matrix(k, n, K);
    std::vector<SymmetricStatistic> out;
    out.reserve(m.cols());
    const Matrix t = m.transpose();
    for (std::size_t c = 0; c < m.cols(); ++c) out.emplace_back(n, K, t.row(c));
    return out;
}

}  // namespace exhd
