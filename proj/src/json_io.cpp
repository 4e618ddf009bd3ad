#include "hilb/json_io.hpp"

#include <stdexcept>

namespace hilb {

using nlohmann::json;

namespace {

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

Poly poly_from_json(const json& j, const char* what) {
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + ": coefficient list must be an array");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_string())
            throw std::invalid_argument(std::string(what) + ": coefficients must be strings");
        coeffs.push_back(Rational::parse(e.get<std::string>()));
    }
    return Poly(std::move(coeffs));
}

int int_from_json_key(const std::string& key) {
    size_t pos = 0;
    int v = std::stoi(key, &pos);
    if (pos != key.size())
        throw std::invalid_argument("GradedScalar: bad degree key '" + key + "'");
    return v;
}

}  // namespace

json to_json(const RationalFunction& f) {
    return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RationalFunction rational_function_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("RationalFunction: expected {num, den}");
    return RationalFunction(poly_from_json(j["num"], "RationalFunction"),
                            poly_from_json(j["den"], "RationalFunction"));
}

json to_json(const GradedScalar& g) {
    json terms = json::object();
    for (const auto& [d, f] : g.terms()) terms[std::to_string(d)] = to_json(f);
    return json{{"terms", terms}};
}

GradedScalar graded_scalar_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_object())
        throw std::invalid_argument("GradedScalar: expected {terms: {...}}");
    GradedScalar g;
    for (const auto& [key, val] : j["terms"].items())
        g += GradedScalar(rational_function_from_json(val), int_from_json_key(key));
    return g;
}

json to_json(const Partition& la) {
    return json(la.parts());
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("Partition: expected an array");
    std::vector<int> parts;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw std::invalid_argument("Partition: parts must be integers");
        parts.push_back(e.get<int>());
    }
    return Partition(std::move(parts));
}

namespace {

const char* basis_tag(Basis b) {
    switch (b) {
        case Basis::monomial: return "m";
        case Basis::power_sum: return "p";
        case Basis::fixed_point: return "fix";
    }
    return "?";
}

Basis basis_from_tag(const std::string& tag) {
    if (tag == "m") return Basis::monomial;
    if (tag == "p") return Basis::power_sum;
    if (tag == "fix") return Basis::fixed_point;
    throw std::invalid_argument("SymFunc: unknown basis tag '" + tag + "'");
}

template <class Coeff, class CoeffToJson>
json symfunc_to_json(const SymFunc<Coeff>& f, CoeffToJson&& coeff_to_json) {
    json terms = json::array();
    for (const auto& [la, c] : f.terms())
        terms.push_back(json{{"partition", to_json(la)}, {"coeff", coeff_to_json(c)}});
    return json{{"basis", basis_tag(f.basis())}, {"terms", terms}};
}

template <class Coeff, class CoeffFromJson>
SymFunc<Coeff> symfunc_from_json(const json& j, CoeffFromJson&& coeff_from_json) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms") ||
        !j["basis"].is_string() || !j["terms"].is_array())
        throw std::invalid_argument("SymFunc: expected {basis, terms}");
    SymFunc<Coeff> f(basis_from_tag(j["basis"].get<std::string>()));
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("partition") || !t.contains("coeff"))
            throw std::invalid_argument("SymFunc: term must have {partition, coeff}");
        f.add_term(partition_from_json(t["partition"]), coeff_from_json(t["coeff"]));
    }
    return f;
}

}  // namespace

json to_json(const SymFuncR& f) {
    return symfunc_to_json(f, [](const RationalFunction& c) { return to_json(c); });
}

json to_json(const SymFuncG& f) {
    return symfunc_to_json(f, [](const GradedScalar& c) { return to_json(c); });
}

SymFuncR symfunc_r_from_json(const json& j) {
    return symfunc_from_json<RationalFunction>(j, rational_function_from_json);
}

SymFuncG symfunc_g_from_json(const json& j) {
    return symfunc_from_json<GradedScalar>(j, graded_scalar_from_json);
}

json to_json(const LaurentChar& chi) {
    json weights = json::array();
    for (const auto& [w, m] : chi.weights())
        weights.push_back(json{{"t1", w.first}, {"t2", w.second}, {"mult", m}});
    return json{{"weights", weights}};
}

LaurentChar laurent_char_from_json(const json& j) {
    if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array())
        throw std::invalid_argument("LaurentChar: expected {weights: [...]}");
    LaurentChar chi;
    for (const auto& w : j["weights"]) {
        if (!w.is_object() || !w.contains("t1") || !w.contains("t2") || !w.contains("mult"))
            throw std::invalid_argument("LaurentChar: weight must have {t1, t2, mult}");
        chi.add(w["t1"].get<int>(), w["t2"].get<int>(), w["mult"].get<long>());
    }
    return chi;
}

json to_json(const Report& rep) {
    json failures = json::array();
    for (const auto& f : rep.failures)
        failures.push_back(json{{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return json{{"suite", rep.suite},
                {"maxdeg", rep.maxdeg},
                {"checks", rep.checks},
                {"failures", failures}};
}

}  // namespace hilb
