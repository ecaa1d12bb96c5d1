#include "exhd/json_io.hpp"

#include <stdexcept>

#include "exhd/law_io.hpp"

namespace exhd {

nlohmann::json to_json(const Composition& c) { return c.counts(); }

namespace {

template <class Tag>
ClassFunction<Tag> class_function_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("class function JSON must be an object");
    for (const char* key : {"order", "K", "values"}) {
        if (!j.contains(key)) throw std::invalid_argument(std::string("class function JSON is missing '") + key + "'");
    }
    if (!j.at("order").is_number_integer() || !j.at("K").is_number_integer() || !j.at("values").is_array()) {
        throw std::invalid_argument("class function JSON has fields of the wrong type");
    }
    const int order = j.at("order").get<int>();
    const int K = j.at("K").get<int>();
    if (order < 0 || K < 1) throw std::invalid_argument("class function JSON needs order >= 0 and K >= 1");

    ClassFunction<Tag> f(order, K);
    std::vector<bool> seen(f.size(), false);
    for (const auto& item : j.at("values")) {
        if (!item.contains("composition") || !item.contains("value") || !item.at("composition").is_array()) {
            throw std::invalid_argument("each value needs 'composition' and 'value'");
        }
        std::vector<int> counts;
        for (const auto& x : item.at("composition")) {
            if (!x.is_number_integer()) throw std::invalid_argument("composition counts must be integers");
            counts.push_back(x.get<int>());
        }
        Composition c;
        try {
            c = Composition(counts);
        } catch (const std::domain_error& e) {
            throw std::invalid_argument(e.what());
        }
        if (c.parts() != K || c.order() != order) {
            throw std::invalid_argument("composition " + c.to_string() + " is not a " + std::to_string(K) +
                                        "-composition of " + std::to_string(order));
        }
        const std::size_t r = composition_rank(c);
        if (seen[r]) throw std::invalid_argument("composition " + c.to_string() + " listed twice");
        seen[r] = true;
        f[r] = rational_from_json(item.at("value"));
    }
    const auto dom = f.domain();
    for (std::size_t r = 0; r < seen.size(); ++r) {
        if (!seen[r]) throw std::invalid_argument("missing value for composition " + dom[r].to_string());
    }
    return f;
}

}  // namespace

SymmetricStatistic statistic_from_json(const nlohmann::json& j) { return class_function_from_json<StatisticTag>(j); }
SymmetricKernel kernel_from_json(const nlohmann::json& j) { return class_function_from_json<KernelTag>(j); }

nlohmann::json to_json(const VerificationEntry& e) {
    return {{"n", e.n}, {"u", e.u}, {"z", to_json(e.z)}, {"m", to_json(e.m)}, {"value", e.value.to_string()}};
}

nlohmann::json to_json(const VerificationReport& rep, bool elide_zeros) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["law"] = rep.law;
    j["n_max"] = rep.n_max;
    j["all_zero"] = rep.all_zero;
    j["tuples_checked"] = rep.entries.size();
    j["zeros_elided"] = elide_zeros;
    auto entries = nlohmann::json::array();
    for (const auto& e : rep.entries) {
        if (elide_zeros && e.value.is_zero()) continue;
        entries.push_back(to_json(e));
    }
    j["entries"] = std::move(entries);
    j["first_nonzero"] = rep.first_nonzero ? to_json(*rep.first_nonzero) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const OracleResult& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["weakly_independent"] = r.weakly_independent;
    j["xi_dimension"] = r.xi_dimension;
    if (r.witness) {
        j["witness"] = {{"basis_index", r.witness->basis_index},
                        {"phi", to_json(r.witness->phi)},
                        {"u", r.witness->u},
                        {"z", to_json(r.witness->z)},
                        {"symmetrized_value", r.witness->value.to_string()}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

nlohmann::json to_json(const ConsistencyReport& r) {
    nlohmann::json j;
    j["pass"] = r.pass;
    j["n_max"] = r.n_max;
    j["failed_check"] = r.pass ? nlohmann::json(nullptr) : nlohmann::json(r.failed_check);
    j["witness"] = r.witness ? to_json(*r.witness) : nlohmann::json(nullptr);
    j["detail"] = r.detail;
    return j;
}

nlohmann::json to_json(const IdentityReport& r) {
    return {{"identity", r.name},
            {"checked", r.checked},
            {"failures", r.failures},
            {"holds", r.holds()},
            {"first_failure", r.first_failure.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.first_failure)}};
}

nlohmann::json to_json(const EmpiricalCylinder& e) {
    nlohmann::json j;
    j["n"] = e.n;
    j["samples"] = e.samples;
    auto classes = nlohmann::json::array();
    for (const auto& c : e.classes) {
        classes.push_back({{"composition", to_json(c.composition)},
                           {"hits", c.hits},
                           {"estimate", c.estimate},
                           {"standard_error", c.standard_error}});
    }
    j["classes"] = std::move(classes);
    return j;
}

nlohmann::json to_json(const std::vector<ClassComparison>& cmp) {
    auto arr = nlohmann::json::array();
    for (const auto& c : cmp) {
        arr.push_back({{"composition", to_json(c.composition)},
                       {"exact", c.exact.to_string()},
                       {"estimate", c.estimate},
                       {"sigma", c.sigma},
                       {"z_score", c.z_score},
                       {"within", c.within}});
    }
    return arr;
}

}  // namespace exhd
