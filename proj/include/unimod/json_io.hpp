#pragma once

// JSON forms of the report types. Objects keep field insertion order.

#include "json.hpp"
#include "unimod/analytic.hpp"
#include "unimod/verify.hpp"

namespace unimod {

using Json = nlohmann::ordered_json;

/// {kind, passed, first_violation, mode_lo, mode_hi, n, details}; absent
/// optionals are omitted.
[[nodiscard]] Json to_json(const CheckReport& r);

/// {bound_id, n, grid:{lo, hi, points}, min_margin, argmin, error_budget,
/// passed, vacuous, inconclusive, mu?, details}.
[[nodiscard]] Json to_json(const BoundCertificate& c);

}  // namespace unimod
