#pragma once

// Trigonometric identities and inequalities used by the bound chain, with
// evaluators that measure how well each one holds at a point.

#include <cstdint>
#include <optional>
#include <string_view>

namespace unimod {

/// sin(N x) / sin(x) with x reduced modulo pi in extended precision, so the
/// quotient stays accurate when x is close to a multiple of pi. At an exact
/// multiple of pi the removable limit (+-N) is returned.
[[nodiscard]] long double sin_ratio(std::int64_t N, long double x);

enum class TrigIdentity {
    sin2_sum,  // sum_{k=1}^n sin^2(kx) = n/2 - sin((2n+1)x)/(4 sin x) + 1/4
    sin4_sum,  // sum_{k=1}^n sin^4(kx) = 3n/8 - sin((2n+1)x)/(4 sin x) + sin((2n+1)2x)/(16 sin 2x) + 3/16
};

/// closed form minus direct summation. Throws NearSingular when |sin x| < 1e-3
/// (or |sin 2x| < 1e-3 for sin4_sum), std::invalid_argument for n < 1.
[[nodiscard]] double trig_identity_residual(TrigIdentity id, std::int64_t n, double x);

enum class TrigInequality {
    sin_lower,        // sin x >= x exp(-x^2/3),                     0 <= x <= 2
    cos_lower,        // cos x >= exp(-gamma x^2), gamma = -log cos 1, |x| <= 1
    sin_sandwich,  // x - x^3/6 <= sin x <= x,                    x >= 0
    cos_upper,        // |cos x| <= exp(-sin^2 x / 2 - sin^4 x / 4),  x >= 0
    sin_ratio_bound,       // |sin(n x) / sin x| <= n,                     sin x != 0
};

struct InequalityPoint {
    double x = 0.0;
    std::int64_t n = 1;  // only read by sin_ratio_bound
};

/// Favoured side minus the other side; nonnegative inside the domain. For the
/// two-sided sin_sandwich this is the smaller of the two margins.
/// Throws DomainViolation outside the stated domain.
[[nodiscard]] double trig_inequality_margin(TrigInequality id, InequalityPoint point);

/// -log(cos(1)), computed at run time.
[[nodiscard]] double gamma_constant();

[[nodiscard]] std::string_view to_string(TrigIdentity id);
[[nodiscard]] std::string_view to_string(TrigInequality id);
[[nodiscard]] std::optional<TrigIdentity> parse_identity(std::string_view name);
[[nodiscard]] std::optional<TrigInequality> parse_inequality(std::string_view name);

}  // namespace unimod
