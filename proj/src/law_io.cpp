#include "exhd/law_io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <vector>

namespace exhd {

namespace {

using ParamMap = std::map<std::string, std::vector<std::string>>;

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

// "a=1,2,b=3" -> {a:[1,2], b:[3]}; bare tokens extend the previous key.
void parse_assignments(std::string_view body, ParamMap& out) {
    std::string key;
    for (const auto& tok : split(body, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty token in law spec");
        const auto eq = tok.find('=');
        if (eq != std::string::npos) {
            key = tok.substr(0, eq);
            if (key.empty() || out.count(key)) throw std::invalid_argument("bad or repeated key '" + key + "' in law spec");
            out[key].push_back(tok.substr(eq + 1));
        } else {
            if (key.empty()) throw std::invalid_argument("value '" + tok + "' without a key in law spec");
            out[key].push_back(tok);
        }
    }
}

const std::vector<std::string>& need(const ParamMap& m, const std::string& key) {
    auto it = m.find(key);
    if (it == m.end()) throw std::invalid_argument("law spec is missing '" + key + "'");
    return it->second;
}

std::vector<Rational> rationals(const std::vector<std::string>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(Rational::parse(s));
    return out;
}

Rational single(const ParamMap& m, const std::string& key) {
    const auto& v = need(m, key);
    if (v.size() != 1) throw std::invalid_argument("'" + key + "' takes a single value");
    return Rational::parse(v.front());
}

void reject_unknown(const ParamMap& m, std::initializer_list<const char*> allowed) {
    for (const auto& [k, _] : m) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) throw std::invalid_argument("unknown law parameter '" + k + "'");
    }
}

int to_int(const Rational& r, const char* what) {
    if (!r.is_integer() || !r.numerator().fits_sint_p()) throw std::invalid_argument(std::string(what) + " must be an integer");
    return static_cast<int>(r.numerator().get_si());
}

std::vector<Rational> rational_list(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw std::invalid_argument(std::string("law JSON needs array '") + key + "'");
    std::vector<Rational> out;
    for (const auto& x : j.at(key)) out.push_back(rational_from_json(x));
    return out;
}

nlohmann::json to_json_list(const std::vector<Rational>& v) {
    auto arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(x.to_string());
    return arr;
}

}  // namespace

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("rationals must be \"num/den\" strings or integers");
}

ExchangeableLaw parse_law_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("law spec needs 'family:params'");
    const std::string family(spec.substr(0, colon));
    const std::string_view body = spec.substr(colon + 1);

    ParamMap params;
    if (family == "mixture") {
        for (const auto& part : split(body, ';')) parse_assignments(part, params);
        const auto weights = rationals(need(params, "w"));
        std::vector<std::vector<Rational>> comps;
        for (std::size_t c = 1; c <= weights.size(); ++c) comps.push_back(rationals(need(params, "p" + std::to_string(c))));
        if (params.size() != weights.size() + 1) throw std::invalid_argument("mixture: expected exactly p1..p" + std::to_string(weights.size()));
        return ExchangeableLaw::mixture(weights, std::move(comps));
    }

    parse_assignments(body, params);
    if (family == "iid") {
        reject_unknown(params, {"p"});
        return ExchangeableLaw::iid(rationals(need(params, "p")));
    }
    if (family == "polya") {
        reject_unknown(params, {"alpha"});
        return ExchangeableLaw::polya(rationals(need(params, "alpha")));
    }
    if (family == "hls") {
        reject_unknown(params, {"K", "pi", "nu", "alpha"});
        return ExchangeableLaw::hls(to_int(single(params, "K"), "K"), single(params, "pi"), single(params, "nu"),
                                    rationals(need(params, "alpha")));
    }
    throw std::invalid_argument("unknown law family '" + family + "'");
}

ExchangeableLaw law_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family")) throw std::invalid_argument("law JSON needs a 'family' field");
    const auto family = j.at("family").get<std::string>();
    if (family == "iid") return ExchangeableLaw::iid(rational_list(j, "p"));
    if (family == "polya") return ExchangeableLaw::polya(rational_list(j, "alpha"));
    if (family == "hls") {
        if (!j.contains("K") || !j.at("K").is_number_integer()) throw std::invalid_argument("hls law JSON needs integer 'K'");
        if (!j.contains("pi") || !j.contains("nu")) throw std::invalid_argument("hls law JSON needs 'pi' and 'nu'");
        return ExchangeableLaw::hls(j.at("K").get<int>(), rational_from_json(j.at("pi")), rational_from_json(j.at("nu")),
                                    rational_list(j, "alpha"));
    }
    if (family == "mixture") {
        if (!j.contains("components") || !j.at("components").is_array()) throw std::invalid_argument("mixture law JSON needs 'components'");
        std::vector<std::vector<Rational>> comps;
        for (const auto& c : j.at("components")) {
            std::vector<Rational> p;
            for (const auto& x : c) p.push_back(rational_from_json(x));
            comps.push_back(std::move(p));
        }
        return ExchangeableLaw::mixture(rational_list(j, "w"), std::move(comps));
    }
    throw std::invalid_argument("unknown law family '" + family + "'");
}

nlohmann::json law_to_json(const ExchangeableLaw& law) {
    nlohmann::json j;
    if (const auto* p = std::get_if<IidParams>(&law.params())) {
        j["family"] = "iid";
        j["p"] = to_json_list(p->p);
    } else if (const auto* p = std::get_if<PolyaParams>(&law.params())) {
        j["family"] = "polya";
        j["alpha"] = to_json_list(p->alpha);
    } else if (const auto* p = std::get_if<HlsParams>(&law.params())) {
        j["family"] = "hls";
        j["K"] = p->K;
        j["pi"] = p->pi.to_string();
        j["nu"] = p->nu.to_string();
        j["alpha"] = to_json_list(p->alpha);
    } else {
        const auto& m = std::get<MixtureParams>(law.params());
        j["family"] = "mixture";
        j["w"] = to_json_list(m.weights);
        auto comps = nlohmann::json::array();
        for (const auto& c : m.components) comps.push_back(to_json_list(c));
        j["components"] = comps;
    }
    return j;
}

ExchangeableLaw load_law(const std::string& spec_or_path) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec_or_path, ec)) {
        std::ifstream in(spec_or_path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("malformed law file: " + std::string(e.what()));
        }
        return law_from_json(j);
    }
    return parse_law_spec(spec_or_path);
}

}  // namespace exhd
