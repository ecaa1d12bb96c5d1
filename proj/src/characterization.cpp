#include "exhd/characterization.hpp"

#include <algorithm>
#include <stdexcept>

#include "exhd/combinatorics.hpp"

namespace exhd {

std::vector<int> mu_shift(int l, int p, std::vector<int> v) {
    const int K = static_cast<int>(v.size()) + 1;
    if (l < 1 || l >= p || p > K) throw std::domain_error("mu_shift needs 1 <= l < p <= K");
    auto& from = v[static_cast<std::size_t>(l - 1)];
    if (from == 0) throw std::domain_error("mu_shift: coordinate " + std::to_string(l) + " is already zero");
    --from;
    if (p <= K - 1) ++v[static_cast<std::size_t>(p - 1)];
    return v;
}

std::uint64_t xi_dimension(int n, int K) {
    if (n < 2 || K < 2) throw std::domain_error("xi_dimension needs n >= 2 and K >= 2");
    return composition_count(n, K) - composition_count(n - 1, K);
}

std::vector<Composition> xi_basis_indices(int n, int K) {
    if (K < 2) throw std::domain_error("xi basis needs K >= 2");
    return compositions_up_to(n, K - 2);
}

namespace {

// (0, m_1, .., m_{K-2}, n - |m|) as a full composition.
Composition boundary_class(const Composition& m, int n) {
    std::vector<int> c{0};
    c.insert(c.end(), m.counts().begin(), m.counts().end());
    c.push_back(n - m.order());
    return Composition(std::move(c));
}

// b_t = m_t - i_{t+1}, t = 1..K-2 (shifted inputs of the star multinomial).
std::vector<long> star_offsets(const Composition& m, const Composition& i, const Composition* q = nullptr) {
    std::vector<long> b(static_cast<std::size_t>(m.parts()));
    for (int t = 0; t < m.parts(); ++t) {
        long v = static_cast<long>(m[t]) - i[t + 1];
        if (q) v -= (*q)[t + 1];
        b[static_cast<std::size_t>(t)] = v;
    }
    return b;
}

}  // namespace

SymmetricKernel xi_basis_kernel(const ExchangeableLaw& law, int n, const Composition& m) {
    const int K = law.alphabet_size();
    if (m.parts() != K - 2 || m.order() > n) throw std::domain_error("xi_basis_kernel: m must be a (K-2)-composition of order <= n");
    const Rational p0 = law.cylinder_prob(boundary_class(m, n));
    SymmetricKernel phi(n, K);
    const auto dom = phi.domain();
    for (std::size_t r = 0; r < dom.size(); ++r) {
        const auto& i = dom[r];
        const auto b = star_offsets(m, i);
        const Integer c = multinomial_star(i[0], b);
        if (c == 0) continue;
        Rational v = Rational(c) * p0 / law.cylinder_prob(i);
        phi[r] = (i[0] % 2) ? -v : v;
    }
    return phi;
}

SymmetricKernel xi_extend_from_boundary(const ExchangeableLaw& law, int n,
                                        const std::function<Rational(const Composition& m)>& boundary) {
    const int K = law.alphabet_size();
    auto dom = compositions(n, K);
    std::stable_sort(dom.begin(), dom.end(), [](const Composition& a, const Composition& b) { return a[0] < b[0]; });
    SymmetricKernel phi(n, K);
    for (const auto& i : dom) {
        if (i[0] == 0) {
            phi.at(i) = boundary(Composition(std::vector<int>(i.counts().begin() + 1, i.counts().end() - 1)));
            continue;
        }
        std::vector<int> reduced(i.counts().begin(), i.counts().end() - 1);
        Rational acc;
        for (int j = 2; j <= K; ++j) {
            std::vector<int> shifted = mu_shift(1, j, reduced);
            int sum = 0;
            for (int x : shifted) sum += x;
            shifted.push_back(n - sum);
            const Composition target(std::move(shifted));
            acc += phi.at(target) * law.cylinder_prob(target);
        }
        phi.at(i) = -acc / law.cylinder_prob(i);
    }
    return phi;
}

std::vector<Composition> coherent_vectors(int m, int v, const Composition& z) {
    if (z.order() != m || v < 0 || v > m) throw std::domain_error("coherent_vectors needs |z| = m and 0 <= v <= m");
    const int K = z.parts();
    std::vector<Composition> out;
    std::vector<int> k(static_cast<std::size_t>(K), 0);
    // Depth-first over p = 0..K-2 with running sums of k and z - k.
    auto rec = [&](auto&& self, int p, int k_sum, int rest_sum) -> void {
        if (p == K - 1) {
            k[static_cast<std::size_t>(p)] = v - k_sum;
            out.emplace_back(k);
            return;
        }
        const int lo = std::max(0, z[p] - (m - v) + rest_sum);
        const int hi = std::min(z[p], v - k_sum);
        for (int x = lo; x <= hi; ++x) {
            k[static_cast<std::size_t>(p)] = x;
            self(self, p + 1, k_sum + x, rest_sum + (z[p] - x));
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

Rational symmetrize_bisym(const BiSymmetricTable& f, int m, int v, const Composition& z) {
    const auto ks = coherent_vectors(m, v, z);
    if (ks.empty()) throw std::domain_error("symmetrize_bisym: empty coherent range");
    Rational num;
    Integer den = 0;
    for (const auto& k : ks) {
        const Integer w = multinomial(k) * multinomial(z - k);
        num += Rational(w) * f(k, z - k);
        den += w;
    }
    return num / Rational(den);
}

Rational characterization_sum(const ExchangeableLaw& law, int n, int u, const Composition& z, const Composition& m) {
    const int K = law.alphabet_size();
    if (K < 3) throw std::domain_error("the combinatorial criterion needs K >= 3; use the weak-independence oracle");
    if (u < 2 || u > n) throw std::domain_error("characterization_sum needs 2 <= u <= n");
    if (z.parts() != K || z.order() != n - 1) throw std::domain_error("z must be a K-composition of n-1");
    if (m.parts() != K - 2 || m.order() > n) throw std::domain_error("m must be a (K-2)-composition of order <= n");

    const auto qs = compositions(u, K);
    Rational total;
    for (const auto& k : coherent_vectors(n - 1, n - u, z)) {
        Rational inner;
        for (const auto& q : qs) {
            const Integer star = multinomial_star(k[0] + q[0], star_offsets(m, k, &q));
            if (star == 0) continue;
            Rational term = Rational(multinomial(q) * star) * conditional_block_prob(law, n, u, k + q, z + q);
            if (q[0] % 2) inner -= term;
            else inner += term;
        }
        Rational outer = Rational(multinomial(k)) * inner;
        if (k[0] % 2) total -= outer;
        else total += outer;
    }
    return total;
}

bool VerificationReport::all_zero_at(int n) const {
    for (const auto& e : entries) {
        if (e.n == n && !e.value.is_zero()) return false;
    }
    return true;
}

namespace {

VerificationReport sweep(const ExchangeableLaw& law, int n_max, bool parallel) {
    const int K = law.alphabet_size();
    if (K < 3) throw std::domain_error("verify_hd needs K >= 3; use the weak-independence oracle for K = 2");
    if (n_max < 2) throw std::domain_error("verify_hd needs n_max >= 2");
    law.warm(2 * n_max - 1);

    VerificationReport rep;
    rep.law = law.spec();
    rep.n_max = n_max;
    for (int n = 2; n <= n_max; ++n) {
        const auto zs = compositions(n - 1, K);
        const auto ms = xi_basis_indices(n, K);
        for (int u = 2; u <= n; ++u)
            for (const auto& z : zs)
                for (const auto& m : ms) rep.entries.push_back({n, u, z, m, Rational()});
    }

    const auto count = static_cast<long>(rep.entries.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long t = 0; t < count; ++t) {
        auto& e = rep.entries[static_cast<std::size_t>(t)];
        e.value = characterization_sum(law, e.n, e.u, e.z, e.m);
    }

    for (const auto& e : rep.entries) {
        if (!e.value.is_zero()) {
            rep.all_zero = false;
            rep.first_nonzero = e;
            break;
        }
    }
    return rep;
}

}  // namespace

VerificationReport verify_hd(const ExchangeableLaw& law, int n_max) { return sweep(law, n_max, true); }

VerificationReport verify_hd_serial(const ExchangeableLaw& law, int n_max) { return sweep(law, n_max, false); }

}  // namespace exhd
