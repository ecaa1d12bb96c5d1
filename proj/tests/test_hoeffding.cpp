#include <doctest.h>

#include "exhd/hoeffding.hpp"
#include "exhd/statistic.hpp"
#include "exhd/weak_independence.hpp"
#include "support.hpp"

using namespace exhd;
using namespace testing_support;

namespace {

ExchangeableLaw uniform3() { return ExchangeableLaw::iid({q(1, 3), q(1, 3), q(1, 3)}); }

SymmetricStatistic first_count(int n, int K) {
    SymmetricStatistic t(n, K);
    const auto dom = t.domain();
    for (std::size_t r = 0; r < dom.size(); ++r) t[r] = Rational(dom[r][0]);
    return t;
}

}  // namespace

TEST_CASE("u-statistic agrees with summing over position subsets") {
    Gen gen(5);
    for (int K = 2; K <= 4; ++K)
        for (int n = 0; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) {
                const auto phi = gen.kernel(k, K);
                CHECK(u_statistic(phi, n) == brute_u_statistic(phi, n));
                CHECK(SymmetricStatistic(n, K, u_statistic_matrix(k, n, K).apply(phi.values())) == u_statistic(phi, n));
            }
    CHECK_THROWS_AS(u_statistic(SymmetricKernel(3, 3), 2), std::domain_error);
}

TEST_CASE("inner product and su basis") {
    const auto law = uniform3();
    SymmetricStatistic one(2, 3, Vector(6, q(1)));
    CHECK(inner_product(law, one, one) == q(1));
    SymmetricStatistic ind(1, 3, {q(1), q(0), q(0)});
    CHECK(inner_product(law, ind, ind) == q(1, 3));
    CHECK_THROWS_AS(inner_product(law, ind, one), std::domain_error);

    const auto b0 = su_basis(law, 3, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == SymmetricStatistic(3, 3, Vector(10, q(1))));
    const auto b1 = su_basis(law, 2, 1);
    REQUIRE(b1.size() == 3);
    CHECK(b1[0] == first_count(2, 3));
    std::vector<Vector> full;
    for (const auto& s : su_basis(law, 3, 3)) full.push_back(s.values());
    CHECK(rank_of(full) == composition_count(3, 3));
}

TEST_CASE("decomposition of simple statistics") {
    const auto law = uniform3();
    SymmetricStatistic c(2, 3, Vector(6, q(7, 2)));
    const auto fc = decompose(law, 2, c);
    CHECK(fc[0] == c);
    CHECK(fc[1].is_zero());
    CHECK(fc[2].is_zero());

    const auto f = decompose(law, 2, first_count(2, 3));
    CHECK(f[0] == SymmetricStatistic(2, 3, Vector(6, q(2, 3))));
    auto centered = first_count(2, 3);
    centered -= f[0];
    CHECK(f[1] == centered);
    CHECK(f[2].is_zero());
}

TEST_CASE("decomposition contract: reconstruction, orthogonality, idempotence") {
    Gen gen(17);
    for (const auto& law : {hls_a(), polya3(), iid3(), mixture3(), hls_k4()}) {
        const int K = law.alphabet_size();
        for (int n = 1; n <= 3; ++n) {
            const HoeffdingBasis basis(law, n);
            for (int trial = 0; trial < 5; ++trial) {
                const auto t = gen.statistic(n, K);
                const auto parts = basis.decompose(t);
                REQUIRE(parts.size() == static_cast<std::size_t>(n + 1));
                SymmetricStatistic sum(n, K);
                for (const auto& p : parts) sum += p;
                CHECK(sum == t);
                for (int a = 0; a <= n; ++a)
                    for (int b = a + 1; b <= n; ++b) CHECK(inner_product(law, parts[a], parts[b]).is_zero());
                for (int k = 0; k <= n; ++k) {
                    const auto again = basis.decompose(parts[k]);
                    for (int j = 0; j <= n; ++j) CHECK(again[j] == (j == k ? parts[k] : SymmetricStatistic(n, K)));
                }
            }
        }
    }
}

TEST_CASE("layer dimensions") {
    for (const auto& law : decomposable_laws()) {
        const int K = law.alphabet_size();
        for (int n = 1; n <= 4; ++n) {
            const auto dims = sh_dims(law, n);
            std::size_t total = 0;
            for (int k = 0; k <= n; ++k) {
                CHECK(dims[k] == composition_count(k, K - 1));
                total += dims[k];
            }
            CHECK(total == composition_count(n, K));
        }
    }
    for (auto d : sh_dims(hls_a(), 3)) CHECK(d >= 1);
}

TEST_CASE("kernel round trip") {
    Gen gen(23);
    for (const auto& law : {hls_a(), polya3()}) {
        const int n = 3;
        const HoeffdingBasis basis(law, n);
        for (int trial = 0; trial < 4; ++trial) {
            const auto parts = basis.decompose(gen.statistic(n, 3));
            for (int k = 0; k <= n; ++k) {
                const auto phi = kernel_for(law, n, parts[k], k);
                CHECK(phi.order() == k);
                CHECK(u_statistic(phi, n) == parts[k]);
            }
        }
    }
    const auto law = uniform3();
    SymmetricStatistic binom(3, 3, Vector(10, q(3)));
    CHECK(u_statistic(kernel_for(law, 3, binom, 1), 3) == binom);
    CHECK(kernel_for(law, 3, SymmetricStatistic(3, 3), 2).is_zero());
    CHECK_THROWS_AS(kernel_for(law, 3, first_count(3, 3), 0), std::domain_error);
}

TEST_CASE("degenerate kernels for each layer, and their orthogonality to lower layers") {
    Gen gen(31);
    for (const auto& law : decomposable_laws()) {
        const int K = law.alphabet_size();
        for (int n = 1; n <= 3; ++n) {
            const HoeffdingBasis basis(law, n);
            const auto parts = basis.decompose(gen.statistic(n, K));
            for (int k = 1; k <= n; ++k) {
                const auto phi = degenerate_kernel_for(law, n, parts[k], k);
                REQUIRE_MESSAGE(phi.has_value(), law.spec() << " n=" << n << " k=" << k);
                CHECK(u_statistic(*phi, n) == parts[k]);
                CHECK(is_completely_degenerate(law, *phi).degenerate);
            }
            for (int k = 1; k <= n; ++k) {
                for (const auto& v : null_space(conditional_expectation_matrix(law, k))) {
                    const SymmetricKernel phi(k, K, v);
                    const auto f = u_statistic(phi, n);
                    for (const auto& lower : su_basis(law, n, k - 1)) CHECK(inner_product(law, f, lower).is_zero());
                }
            }
        }
    }
}

TEST_CASE("degeneracy verdicts") {
    const auto law = iid3();
    SymmetricKernel centered(1, 3, {q(1, 2), q(-1, 2), q(-1, 2)});
    CHECK(is_completely_degenerate(law, centered).degenerate);

    SymmetricKernel one(2, 3, Vector(6, q(1)));
    const auto v = is_completely_degenerate(law, one);
    CHECK_FALSE(v.degenerate);
    REQUIRE(v.violating.has_value());
    CHECK(v.residual == q(1));

    // (1(x=d1) - 1/2)(1(y=d1) - 1/2) on N(2,3).
    SymmetricKernel product(2, 3);
    for (std::size_t r = 0; r < product.size(); ++r) {
        const auto c = product.domain()[r];
        const Rational a = c[0] >= 1 ? q(1, 2) : q(-1, 2);
        const Rational b = c[0] == 2 ? q(1, 2) : q(-1, 2);
        product[r] = a * b;
    }
    CHECK(is_completely_degenerate(law, product).degenerate);
}

TEST_CASE("conditional expectation matrix rows are predictive distributions") {
    const auto m = conditional_expectation_matrix(hls_a(), 3);
    CHECK(m.rows() == composition_count(2, 3));
    CHECK(m.cols() == composition_count(3, 3));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational s;
        for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c);
        CHECK(s == q(1));
    }
}

TEST_CASE("weak independence oracle") {
    CHECK(weak_independence_oracle(iid3(), 3).weakly_independent);
    CHECK(weak_independence_oracle(polya3(), 3).weakly_independent);
    CHECK(weak_independence_oracle(hls_a(), 3).weakly_independent);
    CHECK(weak_independence_oracle(ExchangeableLaw::iid({q(1, 2), q(1, 2)}), 4).weakly_independent);

    bool failed = false;
    for (int n = 2; n <= 4 && !failed; ++n) {
        const auto r = weak_independence_oracle(mixture3(), n);
        if (r.weakly_independent) continue;
        failed = true;
        REQUIRE(r.witness.has_value());
        CHECK_FALSE(r.witness->value.is_zero());
        CHECK(r.witness->u >= 2);
        CHECK(r.witness->z.order() == n - 1);
        CHECK(is_completely_degenerate(mixture3(), r.witness->phi).degenerate);
    }
    CHECK(failed);
}

TEST_CASE("mixture witness regression fixture") {
    const auto r = weak_independence_oracle(mixture3(), 2);
    REQUIRE_FALSE(r.weakly_independent);
    REQUIRE(r.witness.has_value());
    CHECK(r.n == 2);
    CHECK(r.xi_dimension == 3);
    CHECK(r.witness->basis_index == 0);
    CHECK(r.witness->u == 2);
    CHECK(r.witness->z == Composition{1, 0, 0});
    CHECK(r.witness->value == q(-1, 720));
    CHECK(r.witness->phi == SymmetricKernel(2, 3, {q(2, 5), q(-2, 3), q(0), q(1), q(0), q(0)}));
}

TEST_CASE("oracle: parallel and serial agree") {
    for (const auto& law : {hls_a(), mixture3(), polya3()})
        for (int n = 2; n <= 3; ++n) {
            const auto a = weak_independence_oracle(law, n);
            const auto b = weak_independence_oracle_serial(law, n);
            CHECK(a.weakly_independent == b.weakly_independent);
            CHECK(a.xi_dimension == b.xi_dimension);
            REQUIRE(a.witness.has_value() == b.witness.has_value());
            if (a.witness) {
                CHECK(a.witness->basis_index == b.witness->basis_index);
                CHECK(a.witness->u == b.witness->u);
                CHECK(a.witness->z == b.witness->z);
                CHECK(a.witness->value == b.witness->value);
                CHECK(a.witness->phi == b.witness->phi);
            }
        }
}
