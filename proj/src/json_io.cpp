#include "bkptau/json_io.hpp"

#include <cctype>
#include <stdexcept>

namespace bkptau {

using nlohmann::json;

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

namespace {

/// Quotes bare numeric tokens so that "[[1,0,1/2]]" becomes valid JSON.
std::string quote_bare_rationals(std::string_view text) {
    std::string out;
    out.reserve(text.size() + 16);
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '"') {
            const std::size_t end = text.find('"', i + 1);
            if (end == std::string_view::npos) throw std::invalid_argument("unterminated string in constants");
            out.append(text.substr(i, end - i + 1));
            i = end + 1;
            continue;
        }
        const bool starts_number = std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+';
        if (!starts_number) {
            out.push_back(ch);
            ++i;
            continue;
        }
        std::size_t end = i + 1;
        while (end < text.size() && (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '/')) ++end;
        out.push_back('"');
        out.append(text.substr(i, end - i));
        out.push_back('"');
        i = end;
    }
    return out;
}

std::vector<Rational> rational_row(const json& row) {
    if (!row.is_array()) throw std::invalid_argument("constant rows must be arrays");
    std::vector<Rational> out;
    for (const auto& x : row) out.push_back(rational_from_json(x));
    return out;
}

std::vector<std::vector<Rational>> constants_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("constants must be an array of arrays");
    std::vector<std::vector<Rational>> out;
    for (const auto& row : j) out.push_back(rational_row(row));
    return out;
}

}  // namespace

std::vector<std::vector<Rational>> parse_constants(std::string_view text) {
    json j;
    try {
        j = json::parse(quote_bare_rationals(text));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed constants: ") + e.what());
    }
    return constants_from_json(j);
}

TauSpec tau_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lambda")) throw std::invalid_argument("tau spec needs a \"lambda\" array");
    std::vector<unsigned> parts;
    for (const auto& x : j.at("lambda")) {
        if (!x.is_number_integer() || x.get<long>() < 0)
            throw std::invalid_argument("lambda parts must be nonnegative integers");
        parts.push_back(x.get<unsigned>());
    }
    TauSpec spec = TauSpec::plain(ExtendedStrictPartition(std::move(parts)));
    if (j.contains("constants")) {
        auto rows = constants_from_json(j.at("constants"));
        if (rows.size() > spec.lambda.length())
            throw std::invalid_argument("more constant rows than parts of lambda");
        rows.resize(spec.lambda.length());
        spec.constants = std::move(rows);
    }
    spec.validate();
    return spec;
}

json to_json(const TauSpec& spec) {
    json rows = json::array();
    for (const auto& row : spec.constants) {
        json r = json::array();
        for (const auto& c : row) r.push_back(rational_string(c));
        rows.push_back(std::move(r));
    }
    return {{"lambda", spec.lambda.parts()}, {"constants", std::move(rows)}};
}

json to_json(const DefectReport& r) {
    json out{{"is_zero", r.is_zero}, {"defect", canonical_string(r.defect)}, {"witness", nullptr}};
    if (r.witness) out["witness"] = r.witness->to_string();
    return out;
}

json poly_json(const Poly& p) {
    json out{{"poly", canonical_string(p)}, {"degree", nullptr}};
    if (!p.is_zero()) out["degree"] = p.weighted_degree();
    return out;
}

}  // namespace bkptau
