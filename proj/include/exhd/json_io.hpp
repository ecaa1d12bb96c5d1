#pragma once

#include <vector>

#include <json.hpp>

#include "exhd/characterization.hpp"
#include "exhd/identities.hpp"
#include "exhd/laws.hpp"
#include "exhd/statistic.hpp"
#include "exhd/urn.hpp"
#include "exhd/weak_independence.hpp"

namespace exhd {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Composition& c);

/// {"order": k, "K": K, "values": [{"composition": [..], "value": "num/den"}, ..]}
template <class Tag>
nlohmann::json to_json(const ClassFunction<Tag>& f) {
    nlohmann::json j;
    j["order"] = f.order();
    j["K"] = f.alphabet_size();
    auto values = nlohmann::json::array();
    const auto dom = f.domain();
    for (std::size_t r = 0; r < dom.size(); ++r) {
        values.push_back({{"composition", to_json(dom[r])}, {"value", f[r].to_string()}});
    }
    j["values"] = std::move(values);
    return j;
}

/// Parses the class-function format above. Every composition of the order
/// must be present exactly once; throws std::invalid_argument otherwise.
SymmetricStatistic statistic_from_json(const nlohmann::json& j);
SymmetricKernel kernel_from_json(const nlohmann::json& j);

/// Verification report; with elide_zeros only non-zero entries are listed.
nlohmann::json to_json(const VerificationReport& rep, bool elide_zeros);
nlohmann::json to_json(const VerificationEntry& e);

nlohmann::json to_json(const OracleResult& r);
nlohmann::json to_json(const ConsistencyReport& r);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const EmpiricalCylinder& e);
nlohmann::json to_json(const std::vector<ClassComparison>& cmp);

}  // namespace exhd
