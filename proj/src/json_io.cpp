#include "unimod/json_io.hpp"

namespace unimod {

Json to_json(const CheckReport& r) {
    Json j;
    j["kind"] = r.kind;
    j["passed"] = r.passed;
    if (r.first_violation) j["first_violation"] = *r.first_violation;
    if (r.mode_lo) j["mode_lo"] = *r.mode_lo;
    if (r.mode_hi) j["mode_hi"] = *r.mode_hi;
    if (r.n) j["n"] = *r.n;
    j["details"] = r.details;
    return j;
}

Json to_json(const BoundCertificate& c) {
    Json j;
    j["bound_id"] = c.bound_id;
    j["n"] = c.n;
    j["grid"] = {{"lo", c.grid.lo}, {"hi", c.grid.hi}, {"points", c.grid.points}};
    j["min_margin"] = c.min_margin;
    j["argmin"] = c.argmin;
    j["error_budget"] = c.error_budget;
    j["passed"] = c.passed;
    j["vacuous"] = c.vacuous;
    j["inconclusive"] = inconclusive(c);
    if (c.mu) j["mu"] = *c.mu;
    j["details"] = c.details;
    return j;
}

}  // namespace unimod
