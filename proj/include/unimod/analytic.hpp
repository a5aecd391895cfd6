#pragma once

// Floating-point evaluation of the integral representation of a_n(m), the
// derivative integral I_n(mu), and the chain of bounds that shows I_n(mu) >= 0
// for n >= 168. Every certificate is a sampled check with an explicit error
// budget, not a proof over the continuum.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unimod/quadrature.hpp"

namespace unimod {

namespace constants {
// Gaussian-decay constant for the low-theta piece: "where c = 3.832".
inline constexpr double c_decay = 3.832;
// Lower bound I1 >= 0.0583 mu / n^{9/2}.
inline constexpr double i1_coefficient = 0.0583;
// Envelope E(n) < exp(-0.163 n - 0.031) on [pi/(6n+4), pi/2].
inline constexpr double e_slope = 0.163;
inline constexpr double e_intercept = 0.031;
// Branch constants: theta <= pi/6 gives exp(-0.163 n - 0.343),
// theta >= pi/6 gives exp(-0.187 n - 0.031).
inline constexpr double e_low_slope = 0.163;
inline constexpr double e_low_intercept = 0.343;
inline constexpr double e_high_slope = 0.187;
inline constexpr double e_high_intercept = 0.031;
// f(n) <= f(168) < 0.851 and d/dn ln f(n) < -0.13 for n >= 168.
inline constexpr double f_ceiling = 0.851;
inline constexpr double f_log_derivative_ceiling = -0.13;
// Incomplete-gamma tail bound at v0 = c 168^3 / 506^2.
inline constexpr double gamma_tail_bound = 1.29e-30;
// Smallest n for which the analytic argument applies.
inline constexpr std::int64_t n_threshold = 168;
}  // namespace constants

/// d_n = 3(n+1)^2 as a double.
[[nodiscard]] double degree_d(std::int64_t n);

/// prod_{k=0}^{n} cos((3k+1)theta) cos((3k+2)theta), by rotating
/// (cos j*theta, sin j*theta) one step at a time.
[[nodiscard]] double cos_product(std::int64_t n, double theta);

/// cos_product at every theta[i]; the rotations for all abscissae advance in
/// lock step. Requires theta.size() == out.size().
void cos_product(std::int64_t n, std::span<const double> theta, std::span<double> out);

/// theta * sin(mu theta) * cos_product(n, theta).
[[nodiscard]] double integrand(std::int64_t n, double mu, double theta);

/// Options shared by the quadrature-based operations. The panel width is
/// pi / (4 (d_n + |mu|)) divided by `refine`.
struct IntegralOptions {
    QuadratureOptions quadrature{};
    double refine = 1.0;
};

/// Integral of integrand(n, mu, .) over [a, b], 0 <= a < b <= pi/2.
[[nodiscard]] QuadratureResult quad_I(std::int64_t n, double mu, double a, double b,
                                      const IntegralOptions& options = {});

/// a_n(m) = 2^{2n+3}/pi * int_0^{pi/2} cos((d_n - 2m) theta) cos_product(n, theta) dtheta.
/// Requires 0 <= m <= d_n.
[[nodiscard]] QuadratureResult coeff_integral(std::int64_t n, std::int64_t m, const IntegralOptions& options = {});
[[nodiscard]] double coeff_by_integral(std::int64_t n, std::int64_t m, const IntegralOptions& options = {});

struct MuInfo {
    std::int64_t mu = 0;
    /// 0 <= mu <= 6n + 3, equivalently m in the lemma range.
    bool in_lemma_range = false;
};
[[nodiscard]] MuInfo mu_of(std::int64_t n, std::int64_t m);

/// 0.0583 mu n^{-9/2}.
[[nodiscard]] double i1_lower_bound(std::int64_t n, double mu);
/// n >= 168 and 0 <= mu <= 6n + 3.
[[nodiscard]] bool i1_bound_in_domain(std::int64_t n, double mu);

/// Exponent of E(n) at theta:
///   -11(n+1)/16 + 3 sin((6n+5)t)/(16 sin t) - sin((6n+5)2t)/(64 sin 2t)
///   - 3 sin((2n+1)3t)/(16 sin 3t) + sin((2n+1)6t)/(64 sin 6t).
/// Throws SingularPoint if |sin(j theta)| < 1e-12 for j in {1, 2, 3, 6}.
[[nodiscard]] double e_exponent(std::int64_t n, double theta);

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    std::int64_t points = 0;
};

/// Outcome of a sampled bound check. passed implies min_margin > error_budget,
/// except for vacuous certificates (identically zero integrands).
struct BoundCertificate {
    std::string bound_id;
    std::int64_t n = 0;
    GridSpec grid;
    double min_margin = 0.0;
    double argmin = 0.0;
    double error_budget = 0.0;
    bool passed = false;
    bool vacuous = false;
    std::optional<double> mu;
    std::string details;
};

/// |margin| <= error_budget: neither confirmed nor refuted.
[[nodiscard]] bool inconclusive(const BoundCertificate& c);

struct EnvelopeClaim {
    double slope = constants::e_slope;
    double intercept = constants::e_intercept;
};

struct EnvelopeSample {
    double theta = 0.0;
    double exponent = 0.0;
    double bound = 0.0;
};

struct EnvelopeCertification {
    BoundCertificate envelope;     // whole range against the claim
    BoundCertificate low_branch;   // theta <= pi/6 against -0.163n - 0.343
    BoundCertificate high_branch;  // theta > pi/6 against -0.187n - 0.031
    std::vector<EnvelopeSample> samples;  // filled when requested

    [[nodiscard]] bool passed() const { return envelope.passed && low_branch.passed && high_branch.passed; }
};

/// Samples e_exponent on a uniform grid over [pi/(6n+4), pi/2]. Grid points
/// where a denominator vanishes are moved half a step inward.
/// Throws std::invalid_argument if grid_points < 1000 or n < 1.
[[nodiscard]] EnvelopeCertification certify_E_bound(std::int64_t n, std::int64_t grid_points,
                                                    const EnvelopeClaim& claim = {}, bool keep_samples = false);

/// Rounding bound for one e_exponent evaluation.
[[nodiscard]] double e_exponent_error_budget(std::int64_t n);

/// f(n) = pi^3 n^{9/2} / (4 * 0.0583) * (1/2 - 1/(6n+4)) * exp(-0.163 n - 0.031).
[[nodiscard]] double f_value(std::int64_t n);
/// ln f(n), evaluated without forming f (f underflows double near n = 4600).
[[nodiscard]] double f_log_value(std::int64_t n);
/// d/dn ln f(n) = 9/(2n) + 6/((3n+1)(6n+4)) - 0.163.
[[nodiscard]] double f_log_derivative(std::int64_t n);

struct FChainCertification {
    BoundCertificate below_ceiling;       // 0.851 - f(n)
    BoundCertificate log_derivative;      // -0.13 - d/dn ln f(n)
    BoundCertificate strictly_decreasing; // ln f(n) - ln f(n+1)

    [[nodiscard]] bool passed() const {
        return below_ceiling.passed && log_derivative.passed && strictly_decreasing.passed;
    }
};

/// Checks the f-chain at every integer n in [n_min, n_max].
[[nodiscard]] FChainCertification certify_f_chain(std::int64_t n_min, std::int64_t n_max);

/// Upper incomplete gamma integral int_x^inf v^{1/2} e^{-v} dv.
[[nodiscard]] double gamma_tail(double x);

/// v0 = c n^3 / (3n+2)^2, the lower limit of the tail integral.
[[nodiscard]] double gamma_tail_argument(std::int64_t n);

/// Certifies gamma_tail(v0(168)) <= 1.29e-30 and that the low-theta lower bound
/// (sqrt(pi)/2 - 1.29e-30) / (2 c^{3/2}) is >= 0.0583.
[[nodiscard]] BoundCertificate certify_gamma_tail();

/// Quadrature of I1 = I over [0, pi/(6n+4)] and I2 = I over [pi/(6n+4), pi/2];
/// certifies |I2| <= f(n) I1 and, for n >= 168, I1 >= i1_lower_bound(n, mu).
/// mu = 0 yields a vacuous pass. Non-integer or wrong-parity mu and n < 168
/// are accepted and flagged in details.
[[nodiscard]] BoundCertificate i2_ratio_check(std::int64_t n, double mu, const IntegralOptions& options = {});

}  // namespace unimod
