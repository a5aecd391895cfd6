#include "unimod/trig.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "unimod/errors.hpp"

namespace unimod {

long double sin_ratio(std::int64_t N, long double x) {
    constexpr long double pi = std::numbers::pi_v<long double>;
    const long double k = std::nearbyint(x / pi);
    const long double delta = x - k * pi;
    const auto ki = static_cast<std::int64_t>(k);
    const long double sign = ((ki * (N - 1)) % 2 == 0) ? 1.0L : -1.0L;
    if (delta == 0.0L) return sign * static_cast<long double>(N);
    return sign * std::sin(static_cast<long double>(N) * delta) / std::sin(delta);
}

double gamma_constant() { return -std::log(std::cos(1.0)); }

double trig_identity_residual(TrigIdentity id, std::int64_t n, double x) {
    if (n < 1) throw std::invalid_argument("trig_identity_residual: n must be >= 1");
    constexpr double floor = 1e-3;
    if (std::abs(std::sin(x)) < floor)
        throw NearSingular("trig_identity_residual: |sin x| < 1e-3 at x = " + std::to_string(x));
    if (id == TrigIdentity::sin4_sum && std::abs(std::sin(2 * x)) < floor)
        throw NearSingular("trig_identity_residual: |sin 2x| < 1e-3 at x = " + std::to_string(x));

    const long double xl = x;
    const auto nl = static_cast<long double>(n);
    long double direct = 0.0L;
    long double closed = 0.0L;
    if (id == TrigIdentity::sin2_sum) {
        for (std::int64_t k = 1; k <= n; ++k) {
            const long double s = std::sin(static_cast<long double>(k) * xl);
            direct += s * s;
        }
        closed = nl / 2 - sin_ratio(2 * n + 1, xl) / 4 + 0.25L;
    } else {
        for (std::int64_t k = 1; k <= n; ++k) {
            const long double s = std::sin(static_cast<long double>(k) * xl);
            direct += s * s * s * s;
        }
        closed = 3 * nl / 8 - sin_ratio(2 * n + 1, xl) / 4 + sin_ratio(2 * n + 1, 2 * xl) / 16 + 0.1875L;
    }
    return static_cast<double>(closed - direct);
}

namespace {

[[noreturn]] void domain_error(TrigInequality id, const std::string& why) {
    throw DomainViolation(std::string(to_string(id)) + ": " + why);
}

}  // namespace

double trig_inequality_margin(TrigInequality id, InequalityPoint point) {
    const double x = point.x;
    if (!std::isfinite(x)) domain_error(id, "x must be finite");
    switch (id) {
        case TrigInequality::sin_lower:
            if (x < 0.0 || x > 2.0) domain_error(id, "requires 0 <= x <= 2");
            return std::sin(x) - x * std::exp(-x * x / 3.0);
        case TrigInequality::cos_lower:
            if (std::abs(x) > 1.0) domain_error(id, "requires |x| <= 1");
            return std::cos(x) - std::exp(-gamma_constant() * x * x);
        case TrigInequality::sin_sandwich: {
            if (x < 0.0) domain_error(id, "requires x >= 0");
            const double s = std::sin(x);
            return std::min(s - (x - x * x * x / 6.0), x - s);
        }
        case TrigInequality::cos_upper: {
            if (x < 0.0) domain_error(id, "requires x >= 0");
            const double s2 = std::sin(x) * std::sin(x);
            return std::exp(-0.5 * s2 - 0.25 * s2 * s2) - std::abs(std::cos(x));
        }
        case TrigInequality::sin_ratio_bound:
            if (point.n < 1) domain_error(id, "requires n >= 1");
            if (std::sin(x) == 0.0) domain_error(id, "requires sin x != 0");
            return static_cast<double>(static_cast<long double>(point.n) - std::abs(sin_ratio(point.n, x)));
    }
    throw std::invalid_argument("trig_inequality_margin: unknown inequality");
}

std::string_view to_string(TrigIdentity id) {
    return id == TrigIdentity::sin2_sum ? "sin2_sum" : "sin4_sum";
}

std::string_view to_string(TrigInequality id) {
    switch (id) {
        case TrigInequality::sin_lower: return "sin_lower";
        case TrigInequality::cos_lower: return "cos_lower";
        case TrigInequality::sin_sandwich: return "sin_sandwich";
        case TrigInequality::cos_upper: return "cos_upper";
        case TrigInequality::sin_ratio_bound: return "sin_ratio_bound";
    }
    return "unknown";
}

std::optional<TrigIdentity> parse_identity(std::string_view name) {
    for (auto id : {TrigIdentity::sin2_sum, TrigIdentity::sin4_sum})
        if (to_string(id) == name) return id;
    return std::nullopt;
}

std::optional<TrigInequality> parse_inequality(std::string_view name) {
    for (auto id : {TrigInequality::sin_lower, TrigInequality::cos_lower, TrigInequality::sin_sandwich,
                    TrigInequality::cos_upper, TrigInequality::sin_ratio_bound})
        if (to_string(id) == name) return id;
    return std::nullopt;
}

}  // namespace unimod
