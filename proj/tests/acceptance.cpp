// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "exhd/characterization.hpp"
#include "exhd/hoeffding.hpp"
#include "exhd/identities.hpp"
#include "exhd/urn.hpp"
#include "exhd/weak_independence.hpp"
#include "support.hpp"

using namespace exhd;
using namespace testing_support;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run(int id, const char* title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", out.pass ? "PASS" : "FAIL", id, title, secs,
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
}

// every value exactly 0/1 across the whole report
bool exactly_zero(const VerificationReport& rep) {
    if (!rep.all_zero) return false;
    for (const auto& e : rep.entries)
        if (e.value.to_string() != "0/1") return false;
    return true;
}

Outcome verify_all_zero(const std::vector<ExchangeableLaw>& laws, int n_max) {
    Outcome out;
    std::ostringstream os;
    for (const auto& law : laws) {
        const auto rep = verify_hd(law, n_max);
        const bool ok = exactly_zero(rep);
        out.pass = out.pass && ok;
        os << law.spec() << ": " << rep.entries.size() << " tuples " << (ok ? "all 0/1" : "NONZERO") << "; ";
    }
    out.detail = os.str();
    return out;
}

}  // namespace

int main() {
    run(1, "HLS laws pass the decomposability criterion for n <= 4", [] {
        return verify_all_zero({hls_a(), hls_b(), hls_k4()}, 4);
    });

    run(1, "stretch: HLS laws pass the decomposability criterion for n <= 5", [] {
        return verify_all_zero({hls_a(), hls_b(), hls_k4()}, 5);
    });

    run(2, "i.i.d. and Polya controls pass for n <= 4", [] { return verify_all_zero({iid3(), polya3()}, 4); });

    run(3, "mixture is rejected; criterion and oracle agree for every fixture law and n <= 4", [] {
        Outcome out;
        std::ostringstream os;
        const auto mix = verify_hd(mixture3(), 4);
        int criterion_n = 0;
        for (int n = 2; n <= 4 && criterion_n == 0; ++n)
            if (!mix.all_zero_at(n)) criterion_n = n;
        int oracle_n = 0;
        for (int n = 2; n <= 4 && oracle_n == 0; ++n)
            if (!weak_independence_oracle(mixture3(), n).weakly_independent) oracle_n = n;
        out.pass = criterion_n > 0 && oracle_n > 0 && oracle_n <= criterion_n;
        os << "mixture: first nonzero criterion at n=" << criterion_n << ", oracle witness at n=" << oracle_n << "; ";
        int compared = 0;
        for (const auto& law : {hls_a(), hls_b(), hls_k4(), iid3(), polya3(), mixture3()}) {
            const auto rep = verify_hd(law, 4);
            for (int n = 2; n <= 4; ++n) {
                const bool oracle = weak_independence_oracle(law, n).weakly_independent;
                ++compared;
                if (oracle != rep.all_zero_at(n)) {
                    out.pass = false;
                    os << "disagreement for " << law.spec() << " at n=" << n << "; ";
                }
            }
        }
        os << compared << " (law, n) verdict pairs compared";
        out.detail = os.str();
        return out;
    });

    run(4, "closed-form kernels span the degenerate null space with the predicted rank", [] {
        Outcome out;
        int cases = 0;
        const std::vector<ExchangeableLaw> laws{hls_a(), iid3(), mixture3(), hls_k4(),
                                                ExchangeableLaw::polya({q(1), q(1, 2), q(2), q(3)})};
        for (const auto& law : laws) {
            const int K = law.alphabet_size();
            for (int n = 2; n <= 5; ++n) {
                const auto ns = null_space(conditional_expectation_matrix(law, n));
                std::vector<Vector> closed;
                for (const auto& m : xi_basis_indices(n, K)) closed.push_back(xi_basis_kernel(law, n, m).values());
                const auto expected = composition_count(n, K) - composition_count(n - 1, K);
                auto both = closed;
                both.insert(both.end(), ns.begin(), ns.end());
                const bool ok = ns.size() == expected && rank_of(closed) == expected && rank_of(both) == expected;
                out.pass = out.pass && ok;
                if (!ok) out.detail += law.spec() + " n=" + std::to_string(n) + " mismatch; ";
                ++cases;
            }
        }
        out.detail += std::to_string(cases) + " (law, n) cases, K in {3,4}, n <= 5";
        return out;
    });

    run(5, "weighted coherent-split symmetrization equals the permutation average (K=3, m <= 6)", [] {
        Outcome out;
        Gen gen(20240601);
        long checked = 0;
        for (int m = 1; m <= 6; ++m)
            for (int v = 0; v <= m; ++v) {
                std::map<std::pair<Composition, Composition>, Rational> table;
                for (const auto& a : compositions(v, 3))
                    for (const auto& b : compositions(m - v, 3)) table[{a, b}] = gen.rational(20, 9);
                const BiSymmetricTable f = [&](const Composition& a, const Composition& b) { return table.at({a, b}); };
                for (const auto& z : compositions(m, 3)) {
                    ++checked;
                    if (symmetrize_bisym(f, m, v, z) != brute_symmetrize(f, v, z)) {
                        out.pass = false;
                        out.detail = "mismatch at m=" + std::to_string(m) + " v=" + std::to_string(v) + " z=" + z.to_string() + "; ";
                    }
                }
            }
        out.detail += std::to_string(checked) + " (m, v, z) classes";
        return out;
    });

    run(6, "beta-sum, star Vandermonde and sigma identities hold exactly", [] {
        const auto grid = default_beta_grid();
        const std::vector<IdentityReport> reps{check_sommedentro(grid, 6), check_star_vandermonde(6, 6, -2, 12),
                                               check_sigma(grid, 5)};
        Outcome out;
        std::ostringstream os;
        for (const auto& r : reps) {
            out.pass = out.pass && r.holds() && r.checked > 0;
            os << r.name << ": " << r.checked << " checked, " << r.failures << " failed";
            if (!r.holds()) os << " (first: " << r.first_failure << ")";
            os << "; ";
        }
        out.detail = os.str();
        return out;
    });

    run(7, "decomposition contract on 50 random statistics per (law, n <= 4)", [] {
        Outcome out;
        Gen gen(77);
        long statistics = 0;
        const std::vector<std::pair<ExchangeableLaw, bool>> laws{
            {iid3(), true}, {polya3(), true}, {hls_a(), true}, {hls_b(), true}, {hls_k4(), true}, {mixture3(), false}};
        for (const auto& [law, decomposable] : laws) {
            const int K = law.alphabet_size();
            for (int n = 1; n <= 4; ++n) {
                const HoeffdingBasis basis(law, n);
                for (int trial = 0; trial < 50; ++trial) {
                    const auto t = gen.statistic(n, K);
                    const auto parts = basis.decompose(t);
                    SymmetricStatistic sum(n, K);
                    for (const auto& p : parts) sum += p;
                    bool ok = sum == t;
                    for (int a = 0; a <= n && ok; ++a)
                        for (int b = a + 1; b <= n && ok; ++b) ok = inner_product(law, parts[a], parts[b]).is_zero();
                    if (decomposable) {
                        for (int k = 1; k <= n && ok; ++k) {
                            const auto phi = degenerate_kernel_for(law, n, parts[k], k);
                            ok = phi.has_value() && u_statistic(*phi, n) == parts[k] &&
                                 is_completely_degenerate(law, *phi).degenerate;
                        }
                    }
                    ++statistics;
                    if (!ok) {
                        out.pass = false;
                        out.detail = "failure for " + law.spec() + " n=" + std::to_string(n) + "; ";
                    }
                }
            }
        }
        out.detail += std::to_string(statistics) + " statistics decomposed";
        return out;
    });

    run(8, "HLS urn Monte Carlo matches exact class probabilities for two splits of nu", [] {
        Outcome out;
        std::ostringstream os;
        const HlsUrn f{{q(1, 2)}};
        const UrnState split_a({1, 1, 1});
        const UrnState split_b({1, 2, 0});
        const auto law = ExchangeableLaw::hls(3, q(1), q(2), {q(1, 2)});
        const std::uint64_t samples = 100000;
        const std::uint64_t seed = 20240607;
        double worst = 0;
        for (int n = 2; n <= 3; ++n) {
            const auto ea = empirical_cylinder(split_a, f, n, samples, seed);
            const auto eb = empirical_cylinder(split_b, f, n, samples, seed + 1);
            for (const auto* e : {&ea, &eb})
                for (const auto& c : compare_exact(*e, law, 4.0)) {
                    worst = std::max(worst, c.z_score);
                    if (!c.within) {
                        out.pass = false;
                        os << "n=" << n << " class " << c.composition.to_string() << " z=" << c.z_score << "; ";
                    }
                }
            for (std::size_t r = 0; r < ea.classes.size(); ++r) {
                const double pa = ea.classes[r].estimate;
                const double pb = eb.classes[r].estimate;
                const double se = std::sqrt(ea.classes[r].standard_error * ea.classes[r].standard_error +
                                            eb.classes[r].standard_error * eb.classes[r].standard_error);
                if (std::abs(pa - pb) > 4 * se && se > 0) {
                    out.pass = false;
                    os << "splits disagree at n=" << n << " class " << ea.classes[r].composition.to_string() << "; ";
                }
            }
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "max |z| = %.2f over n in {2,3}", worst);
        os << buf;
        out.detail = os.str();
        return out;
    });

    run(9, "cardinality, Pascal-star and layer-dimension structure", [] {
        Outcome out;
        std::ostringstream os;
        const auto qb = check_quandebello(8, 5);
        const auto ps = check_pascal_star(12, -3, 15);
        out.pass = qb.holds() && ps.holds();
        os << qb.name << ": " << qb.checked << " checked; " << ps.name << ": " << ps.checked << " checked; ";
        std::size_t smallest = SIZE_MAX;
        for (const auto& law : {hls_a(), hls_b(), hls_k4(), iid3(), polya3(), mixture3()})
            for (int n = 1; n <= 4; ++n)
                for (auto d : sh_dims(law, n)) smallest = std::min(smallest, d);
        out.pass = out.pass && smallest >= 1;
        os << "min dim SH_k = " << smallest;
        out.detail = os.str();
        return out;
    });

    std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return failures == 0 ? 0 : 1;
}
