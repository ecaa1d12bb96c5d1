#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "exhd/laws.hpp"

namespace exhd {

/// Parses the law-spec grammar:
///   iid:p=1/2,1/3,1/6
///   polya:alpha=1,2,3
///   hls:K=3,pi=1,nu=2,alpha=1/2          (alpha may list K-2 values)
///   mixture:w=1/2,1/2;p1=1/2,1/4,1/4;p2=1/4,1/4,1/2
/// Throws std::invalid_argument on syntax errors and std::domain_error when
/// the parameters violate the family invariants.
ExchangeableLaw parse_law_spec(std::string_view spec);

/// JSON mirror of the grammar, one field per parameter, rationals as strings:
///   {"family":"hls","K":3,"pi":"1","nu":"2","alpha":["1/2"]}
///   {"family":"mixture","w":["1/2","1/2"],"components":[[...],[...]]}
ExchangeableLaw law_from_json(const nlohmann::json& j);
nlohmann::json law_to_json(const ExchangeableLaw& law);

/// Accepts either a spec string or the path of a JSON law file.
ExchangeableLaw load_law(const std::string& spec_or_path);

Rational rational_from_json(const nlohmann::json& j);

}  // namespace exhd
