#pragma once

// JSON and CSV forms shared by the CLI, the verification report and the
// Python bindings.

#include <string>

#include <json.hpp>

#include "mcperm/core.hpp"
#include "mcperm/poly.hpp"
#include "mcperm/statistics.hpp"

namespace mcperm {

using Json = nlohmann::ordered_json;

/// {"exc":..,"exc_A":..,"csum":..,"csum_per_palette":[..],"fix":..,"cyc":..}
Json to_json(const StatisticsRecord& rec);

/// [{"exponents":[q,t,s,u,v,w],"coeff":"decimal"}, ...] in canonical term order.
Json to_json(const MultiPolynomial& p);
MultiPolynomial polynomial_from_json(const Json& j);

/// Per-element export: n, signature, sigma, colors, exc, exc_A, csum, fix,
/// cyc, class_thm1, class_thm2 (blank when the class is undefined).
std::string csv_header();
std::string csv_row(const GroupElement& pi);
Json element_record(const GroupElement& pi);

}  // namespace mcperm
