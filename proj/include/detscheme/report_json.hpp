#pragma once

#include <string>

#include <json.hpp>

#include "detscheme/dimension_formula.hpp"
#include "detscheme/graded_oracle.hpp"
#include "detscheme/poly_matrix.hpp"

namespace detscheme {

using json = nlohmann::ordered_json;

// Integers that fit in 64 bits are written as JSON numbers, larger ones as
// decimal strings; the reader accepts both.
json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

json to_json(const DegreeData& d);
DegreeData degree_data_from_json(const json& j);

/// {"lambda_c", "k_terms", "dim_y", "corollary_value", "canonical": {"h", "p"}}
json to_json(const DimensionReport& r);
DimensionReport dimension_report_from_json(const json& j);

json to_json(const VerificationRecord& r);
VerificationRecord verification_record_from_json(const json& j);

/// Generators as lists of {"exp": [...], "coeff": c} with degree metadata.
json to_json(const GradedIdeal& ideal);
GradedIdeal graded_ideal_from_json(const json& j);

/// One generator per line in variables x0..xn, coefficients in [0, p).
std::string ideal_presentation(const GradedIdeal& ideal);

}  // namespace detscheme
