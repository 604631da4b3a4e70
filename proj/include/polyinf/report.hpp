#pragma once

#include <string>

#include "json.hpp"
#include "polyinf/classifier.hpp"
#include "polyinf/numeric.hpp"

namespace polyinf {

using Json = nlohmann::ordered_json;

/// q rounded to `digits` places after the decimal point.
std::string decimal_string(const Rational& q, int digits);
std::string approx_string(const RealAlgebraic& v, int digits);

// {defining_polynomial, interval: [lo, hi], approx}; infinities as "+inf" / "-inf"
Json algebraic_json(const RealAlgebraic& v, int digits);
Json extended_json(const ExtendedValue& v, int digits);
RealAlgebraic algebraic_from_json(const Json& j);
ExtendedValue extended_from_json(const Json& j);
Json series_json(const PuiseuxSeries& s, int digits);

Json report_json(const AnalysisReport& r, int digits);
Json stability_json(const StabilityReport& s, const AnalysisReport& r);
Json profile_json(const numeric::PsiProfile& p, const numeric::BranchModel* model);
Json discrepancies_json(const std::vector<numeric::Discrepancy>& d);

std::string report_text(const AnalysisReport& r, int digits);
std::string stability_text(const StabilityReport& s, const AnalysisReport& r);

}  // namespace polyinf
