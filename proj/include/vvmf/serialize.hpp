#pragma once

#include <json.hpp>

#include "vvmf/borcherds.hpp"
#include "vvmf/divisors.hpp"
#include "vvmf/fracq.hpp"
#include "vvmf/vvforms.hpp"

namespace vvmf {

using Json = nlohmann::json;

// Rationals travel as strings ("a/b" or "a"); a FracSeries known exactly
// has "trunc": null.

Json to_json(const FracSeries& f);
FracSeries fracseries_from_json(const Json& j);

Json to_json(const VVExpansion& f);
VVExpansion expansion_from_json(const Json& j);

Json to_json(const XiImage& x);
XiImage xi_image_from_json(const Json& j);

Json to_json(const ProductResult& r);

Json to_json(const CuspDivisor& d);
CuspDivisor cusp_divisor_from_json(const Json& j);

Json to_json(const CuspClass& c);
Json to_json(const HeegnerReport& r);
Json to_json(const Certificate& c);
Json to_json(const ClassCoefficients& x);

/// {"principal": [[n, gamma, mult], ...]}-style list.
std::map<Slot, i64> principal_from_json(const Json& j);

}  // namespace vvmf
