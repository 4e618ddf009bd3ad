#pragma once

/**
 * @file json_io.hpp
 * @brief JSON wire formats for the exact types.
 *
 * Formats:
 *   RationalFunction  {"num": ["1", "-2/3", ...], "den": [...]}   (ascending powers)
 *   GradedScalar      {"terms": {"<degree>": <rational function>}}
 *   Partition         [3, 1, 1]
 *   SymFunc           {"basis": "m"|"p"|"fix", "terms": [{"partition": [...], "coeff": ...}]}
 *   LaurentChar       {"weights": [{"t1": a, "t2": b, "mult": m}]}
 *   Report            {"suite": s, "maxdeg": n, "checks": c, "failures": [...]}
 *
 * Parsers validate shape and throw std::invalid_argument on malformed input.
 */

#include <json.hpp>

#include "hilb/graded_scalar.hpp"
#include "hilb/hilbloc.hpp"
#include "hilb/partition.hpp"
#include "hilb/rational_function.hpp"
#include "hilb/report.hpp"
#include "hilb/symfunc.hpp"

namespace hilb {

nlohmann::json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GradedScalar& g);
GradedScalar graded_scalar_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Partition& la);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SymFuncR& f);
nlohmann::json to_json(const SymFuncG& f);
SymFuncR symfunc_r_from_json(const nlohmann::json& j);
SymFuncG symfunc_g_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LaurentChar& chi);
LaurentChar laurent_char_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& rep);

}  // namespace hilb
