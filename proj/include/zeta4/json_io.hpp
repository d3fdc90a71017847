#pragma once
// JSON documents for forms, omega reports and measure results. Every exact
// or high-precision number is a decimal string; object keys are sorted, so
// dump(parse(dump(j))) == dump(j).

#include "zeta4/forms.hpp"
#include "zeta4/measure.hpp"
#include "zeta4/symmetry.hpp"
#include "zeta4/valuation.hpp"

#include "json.hpp"

#include <string>

namespace zeta4::json_io {

using Json = nlohmann::json;

/// Canonical text: two-space indent and a trailing newline.
std::string dump(const Json& j);

std::string decimal(const ExactInt& v);
/// "p/q", or "p" for integers.
std::string decimal(const ExactRat& v);
/// Fixed-point with the given number of fractional digits.
std::string decimal(double v, int digits);
std::string decimal(const BigReal& v, int digits);

/// Eight whitespace-separated integers "eta0 eta-1 eta1 .. eta6";
/// throws "invalid-input" otherwise.
Eta parse_eta(const std::string& text);
Json eta_json(const Eta& eta);
Json directions_json(const DirectionPair& d);

Json form_json(const LinearForm& f);
LinearForm form_from_json(const Json& j);

/// Runs of cells with equal value and argmax; representatives are 1-based
/// indices into reps, and "contributing" lists those named by some argmax.
Json omega_json(const OmegaReport& report, const RepSet& reps);

Json extrapolation_json(const Extrapolation& e);
Json growth_json(const GrowthEstimate& g);

}  // namespace zeta4::json_io
