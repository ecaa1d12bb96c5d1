// hoeffding: verification sweeps, decomposition, identity grids, law
// diagnostics and urn simulation. Exit codes: 0 holds, 1 fails, 2 usage.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "exhd/characterization.hpp"
#include "exhd/hoeffding.hpp"
#include "exhd/identities.hpp"
#include "exhd/json_io.hpp"
#include "exhd/law_io.hpp"
#include "exhd/urn.hpp"
#include "exhd/weak_independence.hpp"

using namespace exhd;
using nlohmann::json;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    std::string law;
    int n_max = 4;
    std::string out;
    int jobs = 0;
    std::uint64_t seed = 1;
    bool zeros_only = true;
};

void emit(const json& report, const std::string& out) {
    const std::string text = report.dump(2) + "\n";
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + out + "'");
    f << text;
}

void configure_jobs(int jobs) {
    if (const char* env = std::getenv("HOEFFDING_JOBS")) {
        try {
            jobs = std::stoi(env);
        } catch (const std::exception&) {
            throw UsageError("HOEFFDING_JOBS must be a positive integer");
        }
        if (jobs < 1) throw UsageError("HOEFFDING_JOBS must be a positive integer");
    }
    if (jobs > 0) omp_set_num_threads(jobs);
}

ExchangeableLaw load(const std::string& spec) {
    if (spec.empty()) throw UsageError("--law is required");
    try {
        return load_law(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("cannot parse law: ") + e.what());
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("invalid law parameters: ") + e.what());
    }
}

Rational parse_rational(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(flag) + ": '" + text + "' is not a rational");
    }
}

int cmd_verify(const CliConfig& cfg) {
    const auto law = load(cfg.law);
    if (law.alphabet_size() < 3) {
        throw UsageError("verify needs K >= 3; for two-color laws run: hoeffding oracle --law '" + cfg.law + "'");
    }
    if (cfg.n_max < 2) throw UsageError("--n-max must be >= 2");
    const auto rep = verify_hd(law, cfg.n_max);
    emit(to_json(rep, cfg.zeros_only), cfg.out);
    return rep.all_zero ? kHolds : kFails;
}

int cmd_oracle(const CliConfig& cfg) {
    const auto law = load(cfg.law);
    if (cfg.n_max < 2) throw UsageError("--n-max must be >= 2");
    json j;
    j["schema_version"] = kSchemaVersion;
    j["law"] = law.spec();
    j["n_max"] = cfg.n_max;
    auto orders = json::array();
    bool all = true;
    for (int n = 2; n <= cfg.n_max; ++n) {
        const auto r = weak_independence_oracle(law, n);
        orders.push_back(to_json(r));
        all = all && r.weakly_independent;
        if (!r.weakly_independent) break;  // the witness at the first failing order suffices
    }
    j["orders"] = std::move(orders);
    j["weakly_independent"] = all;
    emit(j, cfg.out);
    return all ? kHolds : kFails;
}

int cmd_decompose(const CliConfig& cfg, const std::string& statistic_path) {
    const auto law = load(cfg.law);
    std::ifstream in(statistic_path);
    if (!in) throw UsageError("cannot read statistic file '" + statistic_path + "'");
    SymmetricStatistic t;
    try {
        t = statistic_from_json(json::parse(in));
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed statistic file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("malformed statistic file: ") + e.what());
    }
    if (t.alphabet_size() != law.alphabet_size()) throw UsageError("statistic alphabet does not match the law");
    const int n = t.order();
    const auto consistency = check_consistency(law, n);
    if (!consistency.pass) throw UsageError("law fails " + consistency.failed_check + ": " + consistency.detail);

    const HoeffdingBasis basis(law, n);
    const auto parts = basis.decompose(t);
    const auto dims = basis.dims();
    SymmetricStatistic sum(n, t.alphabet_size());
    json components = json::array();
    for (int k = 0; k <= n; ++k) {
        sum += parts[static_cast<std::size_t>(k)];
        const auto phi = kernel_for(law, n, parts[static_cast<std::size_t>(k)], k);
        json c;
        c["k"] = k;
        c["dimension"] = dims[static_cast<std::size_t>(k)];
        c["component"] = to_json(parts[static_cast<std::size_t>(k)]);
        c["kernel"] = to_json(phi);
        if (k == 0) {
            c["kernel_degenerate"] = nullptr;
        } else {
            const auto verdict = is_completely_degenerate(law, phi);
            c["kernel_degenerate"] = verdict.degenerate;
        }
        if (k >= 1) {
            const auto deg = degenerate_kernel_for(law, n, parts[static_cast<std::size_t>(k)], k);
            c["degenerate_kernel"] = deg ? to_json(*deg) : json(nullptr);
        }
        components.push_back(std::move(c));
    }
    json j;
    j["schema_version"] = kSchemaVersion;
    j["law"] = law.spec();
    j["n"] = n;
    j["statistic"] = to_json(t);
    j["components"] = std::move(components);
    j["reconstruction"] = sum == t ? "exact" : "mismatch";
    emit(j, cfg.out);
    return sum == t ? kHolds : kFails;
}

struct IdentityArgs {
    std::string name;
    std::string pi, nu;
    int n_max = -1;
    int u_max = 6, k1_max = 6, j_min = -2, j_max = 12;
    int a_max = 12, b_min = -3, b_max = 15;
    int k_max = 5;
};

int cmd_identity(const CliConfig& cfg, const IdentityArgs& a) {
    IdentityReport rep;
    if (a.name == "sommedentro") {
        std::vector<std::pair<Rational, Rational>> grid;
        if (a.pi.empty() != a.nu.empty()) throw UsageError("--pi and --nu go together");
        if (a.pi.empty()) {
            grid = default_beta_grid();
        } else {
            const Rational pi = parse_rational(a.pi, "--pi");
            const Rational nu = parse_rational(a.nu, "--nu");
            if (pi.sign() <= 0 || nu.sign() <= 0) throw UsageError("--pi and --nu must be positive");
            grid.emplace_back(pi, nu);
        }
        rep = check_sommedentro(grid, a.n_max < 0 ? 6 : a.n_max);
    } else if (a.name == "star-vandermonde") {
        rep = check_star_vandermonde(a.u_max, a.k1_max, a.j_min, a.j_max);
    } else if (a.name == "pascal-star") {
        rep = check_pascal_star(a.a_max, a.b_min, a.b_max);
    } else if (a.name == "quandebello") {
        rep = check_quandebello(a.n_max < 0 ? 8 : a.n_max, a.k_max);
    } else {
        throw UsageError("unknown identity '" + a.name + "' (sommedentro | star-vandermonde | pascal-star | quandebello)");
    }
    json j = to_json(rep);
    j["schema_version"] = kSchemaVersion;
    emit(j, cfg.out);
    return rep.holds() ? kHolds : kFails;
}

struct SimulateArgs {
    std::string urn;
    std::string pi = "1", nu = "2";
    std::vector<std::string> alpha;
    std::vector<long> nu_split;
    std::vector<long> counts;
    std::vector<std::string> p;
    int n = 2;
    std::uint64_t samples = 10000;
    bool compare_exact = false;
    bool trace = false;
};

int cmd_simulate(const CliConfig& cfg, const SimulateArgs& a) {
    std::optional<UrnState> init;
    UrnFunction f;
    json urn;
    try {
        if (a.urn == "hls") {
            const Rational pi = parse_rational(a.pi, "--pi");
            const Rational nu = parse_rational(a.nu, "--nu");
            if (!pi.is_integer() || !nu.is_integer() || pi.sign() <= 0 || nu.sign() <= 0) {
                throw UsageError("the hls urn needs positive integer --pi and --nu (ball counts)");
            }
            std::vector<Rational> alpha;
            for (const auto& s : a.alpha) alpha.push_back(parse_rational(s, "--alpha"));
            const int K = static_cast<int>(alpha.size()) + 2;
            std::vector<long> counts{pi.numerator().get_si()};
            if (a.nu_split.empty()) {
                // spread nu as evenly as possible over colors 2..K
                const long total = nu.numerator().get_si();
                for (int c = 0; c < K - 1; ++c) counts.push_back(total / (K - 1) + (c < total % (K - 1) ? 1 : 0));
            } else {
                if (static_cast<int>(a.nu_split.size()) != K - 1) throw UsageError("--nu-split needs K-1 counts");
                long s = 0;
                for (long c : a.nu_split) s += c;
                if (Rational(s) != nu) throw UsageError("--nu-split must sum to --nu");
                counts.insert(counts.end(), a.nu_split.begin(), a.nu_split.end());
            }
            init.emplace(counts);
            f = HlsUrn{alpha};
            urn = {{"family", "hls"}, {"alpha", a.alpha}};
        } else if (a.urn == "polya") {
            init.emplace(a.counts.empty() ? std::vector<long>{1, 1, 1} : a.counts);
            f = IdentityUrn{};
            urn = {{"family", "polya"}};
        } else if (a.urn == "iid") {
            std::vector<Rational> p;
            for (const auto& s : a.p) p.push_back(parse_rational(s, "--p"));
            if (p.empty()) throw UsageError("the iid urn needs --p");
            init.emplace(std::vector<long>(p.size(), 1));
            f = ConstantUrn{p};
            urn = {{"family", "iid"}, {"p", a.p}};
        } else {
            throw UsageError("--urn must be one of hls | polya | iid");
        }
        (void)urn_probabilities(f, *init);
        if (a.n < 0) throw UsageError("--n must be >= 0");
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("invalid urn: ") + e.what());
    }

    if (a.trace) {
        for (int c : simulate(*init, f, a.n, cfg.seed)) std::cout << c << "\n";
        return kHolds;
    }

    const auto est = empirical_cylinder(*init, f, a.n, a.samples, cfg.seed);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["urn"] = urn;
    j["initial"] = init->counts();
    j["seed"] = cfg.seed;
    j["estimate"] = to_json(est);
    int code = kHolds;
    if (a.compare_exact) {
        const auto law = urn_law(*init, f);
        const auto cmp = compare_exact(est, law);
        bool all = true;
        for (const auto& c : cmp) all = all && c.within;
        j["law"] = law.spec();
        j["comparison"] = to_json(cmp);
        j["all_within_4_sigma"] = all;
        code = all ? kHolds : kFails;
    }
    emit(j, cfg.out);
    return code;
}

int cmd_law_check(const CliConfig& cfg) {
    const auto law = load(cfg.law);
    if (cfg.n_max < 1) throw UsageError("--n-max must be >= 1");
    const auto rep = check_consistency(law, cfg.n_max);
    json j = to_json(rep);
    j["schema_version"] = kSchemaVersion;
    j["law"] = law_to_json(law);
    j["spec"] = law.spec();
    emit(j, cfg.out);
    return rep.pass ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks of Hoeffding decomposability for exchangeable laws on finite alphabets"};
    app.require_subcommand(1);
    CliConfig cfg;
    auto add_common = [&](CLI::App* sub, bool with_law) {
        if (with_law) sub->add_option("--law", cfg.law, "law spec string or JSON law file")->required();
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--jobs", cfg.jobs, "worker threads (default: all cores; HOEFFDING_JOBS overrides)")
            ->check(CLI::PositiveNumber);
    };

    auto* verify = app.add_subcommand("verify", "evaluate the decomposability criterion for n <= n-max");
    add_common(verify, true);
    verify->add_option("--n-max", cfg.n_max, "largest order n")->capture_default_str();
    verify->add_option("--zeros-only", cfg.zeros_only,
                       "true: list only non-zero criterion values; false: list every tuple")
        ->capture_default_str();

    auto* oracle = app.add_subcommand("oracle", "brute-force weak-independence check for n <= n-max");
    add_common(oracle, true);
    oracle->add_option("--n-max", cfg.n_max, "largest order n")->capture_default_str();

    std::string statistic_path;
    auto* decompose = app.add_subcommand("decompose", "Hoeffding decomposition of a symmetric statistic");
    add_common(decompose, true);
    decompose->add_option("--statistic", statistic_path, "statistic JSON file")->required();

    IdentityArgs ia;
    auto* identity = app.add_subcommand("identity", "exhaustive identity grid");
    add_common(identity, false);
    identity->add_option("name", ia.name, "sommedentro | star-vandermonde | pascal-star | quandebello")->required();
    identity->add_option("--pi", ia.pi, "Beta parameter pi (sommedentro)");
    identity->add_option("--nu", ia.nu, "Beta parameter nu (sommedentro)");
    identity->add_option("--n-max", ia.n_max, "largest n (sommedentro: 6, quandebello: 8)");
    identity->add_option("--u-max", ia.u_max)->capture_default_str();
    identity->add_option("--k1-max", ia.k1_max)->capture_default_str();
    identity->add_option("--j-min", ia.j_min)->capture_default_str();
    identity->add_option("--j-max", ia.j_max)->capture_default_str();
    identity->add_option("--a-max", ia.a_max)->capture_default_str();
    identity->add_option("--b-min", ia.b_min)->capture_default_str();
    identity->add_option("--b-max", ia.b_max)->capture_default_str();
    identity->add_option("--k-max", ia.k_max)->capture_default_str();

    SimulateArgs sa;
    auto* sim = app.add_subcommand("simulate", "urn simulation and Monte Carlo cylinder estimates");
    add_common(sim, false);
    sim->add_option("--urn", sa.urn, "hls | polya | iid")->required();
    sim->add_option("--pi", sa.pi, "hls: initial balls of color 1")->capture_default_str();
    sim->add_option("--nu", sa.nu, "hls: initial balls of the other colors")->capture_default_str();
    sim->add_option("--alpha", sa.alpha, "hls: K-2 rationals")->delimiter(',');
    sim->add_option("--nu-split", sa.nu_split, "hls: initial counts of colors 2..K summing to nu")->delimiter(',');
    sim->add_option("--counts", sa.counts, "polya: initial counts")->delimiter(',');
    sim->add_option("--p", sa.p, "iid: draw probabilities")->delimiter(',');
    sim->add_option("--n", sa.n, "prefix length")->capture_default_str();
    sim->add_option("--samples", sa.samples, "number of independent prefixes")->capture_default_str();
    sim->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sim->add_flag("--compare-exact", sa.compare_exact, "compare against the exact law (4 sigma)");
    sim->add_flag("--trace", sa.trace, "print one simulated color sequence, one 0-based color per line");

    auto* law_check = app.add_subcommand("law-check", "positivity, consistency and normalization diagnostics");
    add_common(law_check, true);
    law_check->add_option("--n-max", cfg.n_max, "largest order n")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        configure_jobs(cfg.jobs);
        if (*verify) return cmd_verify(cfg);
        if (*oracle) return cmd_oracle(cfg);
        if (*decompose) return cmd_decompose(cfg, statistic_path);
        if (*identity) return cmd_identity(cfg, ia);
        if (*sim) return cmd_simulate(cfg, sa);
        if (*law_check) return cmd_law_check(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
