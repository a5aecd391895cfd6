#include "unimod/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "unimod/errors.hpp"
#include "unimod/trig.hpp"

namespace unimod {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

double panel_width(std::int64_t n, double mu, const IntegralOptions& options) {
    if (!(options.refine >= 1.0)) throw std::invalid_argument("IntegralOptions.refine must be >= 1");
    return pi / (4.0 * (degree_d(n) + std::abs(mu))) / options.refine;
}

// Per-evaluation relative error of cos_product: each rotated cosine carries
// about j ulps after j steps, and 2(n+1) of them are multiplied.
QuadratureOptions with_eval_error(std::int64_t n, QuadratureOptions q) {
    const double steps = 3.0 * static_cast<double>(n) + 2.0;
    q.relative_eval_error = std::max(q.relative_eval_error, (steps + 8.0) * 2.0 * (static_cast<double>(n) + 1.0) * eps);
    return q;
}

void require_n(std::int64_t n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be >= 0");
}

}  // namespace

double degree_d(std::int64_t n) {
    const double k = static_cast<double>(n) + 1.0;
    return 3.0 * k * k;
}

double cos_product(std::int64_t n, double theta) {
    const double c1 = std::cos(theta);
    const double s1 = std::sin(theta);
    double c = 1.0, s = 0.0, prod = 1.0;
    const std::int64_t top = 3 * n + 2;
    for (std::int64_t j = 1; j <= top; ++j) {
        const double cn = c * c1 - s * s1;
        s = s * c1 + c * s1;
        c = cn;
        if (j % 3 != 0) prod *= c;
    }
    return prod;
}

void cos_product(std::int64_t n, std::span<const double> theta, std::span<double> out) {
    if (theta.size() != out.size()) throw std::invalid_argument("cos_product: size mismatch");
    constexpr std::size_t block = 16;
    const std::int64_t top = 3 * n + 2;
    for (std::size_t base = 0; base < theta.size(); base += block) {
        const std::size_t len = std::min(block, theta.size() - base);
        double c1[block], s1[block], c[block], s[block], prod[block];
        for (std::size_t i = 0; i < len; ++i) {
            c1[i] = std::cos(theta[base + i]);
            s1[i] = std::sin(theta[base + i]);
            c[i] = 1.0;
            s[i] = 0.0;
            prod[i] = 1.0;
        }
        for (std::int64_t j = 1; j <= top; ++j) {
            for (std::size_t i = 0; i < len; ++i) {
                const double cn = c[i] * c1[i] - s[i] * s1[i];
                s[i] = s[i] * c1[i] + c[i] * s1[i];
                c[i] = cn;
            }
            if (j % 3 != 0)
                for (std::size_t i = 0; i < len; ++i) prod[i] *= c[i];
        }
        for (std::size_t i = 0; i < len; ++i) out[base + i] = prod[i];
    }
}

double integrand(std::int64_t n, double mu, double theta) {
    return theta * std::sin(mu * theta) * cos_product(n, theta);
}

QuadratureResult quad_I(std::int64_t n, double mu, double a, double b, const IntegralOptions& options) {
    require_n(n, "quad_I");
    if (!(a >= 0.0 && a < b && b <= pi / 2 + 4 * eps))
        throw std::invalid_argument("quad_I: need 0 <= a < b <= pi/2");
    const BatchIntegrand f = [n, mu](std::span<const double> t, std::span<double> out) {
        cos_product(n, t, out);
        for (std::size_t i = 0; i < t.size(); ++i) out[i] *= t[i] * std::sin(mu * t[i]);
    };
    return integrate(f, a, b, panel_width(n, mu, options), with_eval_error(n, options.quadrature));
}

QuadratureResult coeff_integral(std::int64_t n, std::int64_t m, const IntegralOptions& options) {
    require_n(n, "coeff_by_integral");
    const auto d = static_cast<std::int64_t>(degree_d(n));
    if (m < 0 || m > d) throw std::invalid_argument("coeff_by_integral: m must lie in [0, d_n]");
    const double mu = static_cast<double>(d - 2 * m);
    const BatchIntegrand f = [n, mu](std::span<const double> t, std::span<double> out) {
        cos_product(n, t, out);
        for (std::size_t i = 0; i < t.size(); ++i) out[i] *= std::cos(mu * t[i]);
    };
    QuadratureResult r = integrate(f, 0.0, pi / 2, panel_width(n, mu, options), with_eval_error(n, options.quadrature));
    const double scale = std::ldexp(1.0, static_cast<int>(2 * n + 3)) / pi;
    r.value *= scale;
    r.abs_error_estimate *= scale;
    r.l1_norm *= scale;
    return r;
}

double coeff_by_integral(std::int64_t n, std::int64_t m, const IntegralOptions& options) {
    return coeff_integral(n, m, options).value;
}

MuInfo mu_of(std::int64_t n, std::int64_t m) {
    const std::int64_t d = 3 * (n + 1) * (n + 1);
    const std::int64_t mu = d - 2 * m;
    return {mu, mu >= 0 && mu <= 6 * n + 3};
}

double i1_lower_bound(std::int64_t n, double mu) {
    if (n < 1) throw std::invalid_argument("i1_lower_bound: n must be >= 1");
    return constants::i1_coefficient * mu * std::pow(static_cast<double>(n), -4.5);
}

bool i1_bound_in_domain(std::int64_t n, double mu) {
    return n >= constants::n_threshold && mu >= 0.0 && mu <= 6.0 * static_cast<double>(n) + 3.0;
}

double e_exponent(std::int64_t n, double theta) {
    if (n < 0) throw std::invalid_argument("e_exponent: n must be >= 0");
    for (int j : {1, 2, 3, 6})
        if (std::abs(std::sin(j * theta)) < 1e-12)
            throw SingularPoint("e_exponent: sin(" + std::to_string(j) + " theta) vanishes at theta = " + fmt(theta));

    const long double t = theta;
    const std::int64_t big = 6 * n + 5;
    const std::int64_t small = 2 * n + 1;
    const long double e = -11.0L * static_cast<long double>(n + 1) / 16 + 3 * sin_ratio(big, t) / 16 -
                          sin_ratio(big, 2 * t) / 64 - 3 * sin_ratio(small, 3 * t) / 16 +
                          sin_ratio(small, 6 * t) / 64;
    return static_cast<double>(e);
}

double e_exponent_error_budget(std::int64_t n) {
    const double big = 6.0 * static_cast<double>(n) + 5.0;
    const double small = 2.0 * static_cast<double>(n) + 1.0;
    const double scale = 11.0 * (static_cast<double>(n) + 1.0) / 16 + 3 * big / 16 + big / 64 + 3 * small / 16 +
                         small / 64;
    return 64 * eps * scale;
}

bool inconclusive(const BoundCertificate& c) {
    return !c.passed && !c.vacuous && std::abs(c.min_margin) <= c.error_budget;
}

EnvelopeCertification certify_E_bound(std::int64_t n, std::int64_t grid_points, const EnvelopeClaim& claim,
                                      bool keep_samples) {
    if (n < 1) throw std::invalid_argument("certify_E_bound: n must be >= 1");
    if (grid_points < 1000) throw std::invalid_argument("certify_E_bound: need at least 1000 grid points");

    const double lo = pi / (6.0 * static_cast<double>(n) + 4.0);
    const double hi = pi / 2;
    const double step = (hi - lo) / static_cast<double>(grid_points - 1);
    const double split = pi / 6;
    const double nd = static_cast<double>(n);
    const double claim_bound = -claim.slope * nd - claim.intercept;
    const double low_bound = -constants::e_low_slope * nd - constants::e_low_intercept;
    const double high_bound = -constants::e_high_slope * nd - constants::e_high_intercept;
    const double budget = e_exponent_error_budget(n);

    EnvelopeCertification out;
    auto init = [&](BoundCertificate& c, std::string id, double glo, double ghi) {
        c.bound_id = std::move(id);
        c.n = n;
        c.grid = {glo, ghi, 0};
        c.min_margin = std::numeric_limits<double>::infinity();
        c.error_budget = budget;
    };
    init(out.envelope, "E_envelope", lo, hi);
    init(out.low_branch, "E_branch_low", lo, std::min(split, hi));
    init(out.high_branch, "E_branch_high", split, hi);

    auto record = [](BoundCertificate& c, double margin, double theta) {
        ++c.grid.points;
        if (margin < c.min_margin) {
            c.min_margin = margin;
            c.argmin = theta;
        }
    };

    std::int64_t perturbed = 0;
    if (keep_samples) out.samples.reserve(static_cast<std::size_t>(grid_points));
    for (std::int64_t i = 0; i < grid_points; ++i) {
        double theta = (i == grid_points - 1) ? hi : lo + static_cast<double>(i) * step;
        double e;
        try {
            e = e_exponent(n, theta);
        } catch (const SingularPoint&) {
            theta += (i == grid_points - 1) ? -0.5 * step : 0.5 * step;
            e = e_exponent(n, theta);
            ++perturbed;
        }
        record(out.envelope, claim_bound - e, theta);
        if (theta <= split)
            record(out.low_branch, low_bound - e, theta);
        else
            record(out.high_branch, high_bound - e, theta);
        if (keep_samples) out.samples.push_back({theta, e, claim_bound});
    }

    auto finish = [&](BoundCertificate& c, double bound) {
        c.passed = c.grid.points > 0 && c.min_margin > c.error_budget;
        c.details = "exponent <= " + fmt(bound) + " at " + std::to_string(c.grid.points) + " points";
        if (perturbed > 0) c.details += ", " + std::to_string(perturbed) + " singular points shifted half a step";
        if (n < constants::n_threshold) c.details += ", n below 168: outside the claimed range";
    };
    finish(out.envelope, claim_bound);
    finish(out.low_branch, low_bound);
    finish(out.high_branch, high_bound);
    return out;
}

double f_value(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("f_value: n must be >= 1");
    const double nd = static_cast<double>(n);
    return pi * pi * pi * std::pow(nd, 4.5) / (4 * constants::i1_coefficient) * (0.5 - 1.0 / (6 * nd + 4)) *
           std::exp(-constants::e_slope * nd - constants::e_intercept);
}

double f_log_value(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("f_log_value: n must be >= 1");
    const double nd = static_cast<double>(n);
    return 3 * std::log(pi) + 4.5 * std::log(nd) - std::log(4 * constants::i1_coefficient) +
           std::log(0.5 - 1.0 / (6 * nd + 4)) - constants::e_slope * nd - constants::e_intercept;
}

double f_log_derivative(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("f_log_derivative: n must be >= 1");
    const double nd = static_cast<double>(n);
    return 9.0 / (2 * nd) + 6.0 / ((3 * nd + 1) * (6 * nd + 4)) - constants::e_slope;
}

FChainCertification certify_f_chain(std::int64_t n_min, std::int64_t n_max) {
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("certify_f_chain: need 1 <= n_min <= n_max");

    FChainCertification out;
    auto init = [&](BoundCertificate& c, std::string id, double budget) {
        c.bound_id = std::move(id);
        c.n = n_min;
        c.grid = {static_cast<double>(n_min), static_cast<double>(n_max), n_max - n_min + 1};
        c.min_margin = std::numeric_limits<double>::infinity();
        c.error_budget = budget;
    };
    // f carries a few ulps from pow/exp plus |exponent| ulps from the argument.
    init(out.below_ceiling, "f_below_0.851", 64 * eps);
    init(out.log_derivative, "f_log_derivative_below_-0.13", 16 * eps);
    // ln f(n) has magnitude at most 0.163 n + 60.
    init(out.strictly_decreasing, "f_strictly_decreasing",
         32 * eps * (constants::e_slope * static_cast<double>(n_max + 1) + 60));

    auto record = [](BoundCertificate& c, double margin, std::int64_t n) {
        if (margin < c.min_margin) {
            c.min_margin = margin;
            c.argmin = static_cast<double>(n);
        }
    };
    for (std::int64_t n = n_min; n <= n_max; ++n) {
        record(out.below_ceiling, constants::f_ceiling - f_value(n), n);
        record(out.log_derivative, constants::f_log_derivative_ceiling - f_log_derivative(n), n);
        record(out.strictly_decreasing, f_log_value(n) - f_log_value(n + 1), n);
    }
    for (auto* c : {&out.below_ceiling, &out.log_derivative, &out.strictly_decreasing})
        c->passed = c->min_margin > c->error_budget;
    out.below_ceiling.details = "f(" + std::to_string(n_min) + ") = " + fmt(f_value(n_min));
    out.log_derivative.details = "max d/dn ln f = " + fmt(constants::f_log_derivative_ceiling - out.log_derivative.min_margin);
    out.strictly_decreasing.details = "compared in log form: ln f(n) > ln f(n+1)";
    if (n_min < constants::n_threshold)
        for (auto* c : {&out.below_ceiling, &out.log_derivative, &out.strictly_decreasing})
            c->details += "; n below 168: outside the claimed range";
    return out;
}

double gamma_tail(double x) {
    if (!(x >= 0.0)) throw std::invalid_argument("gamma_tail: x must be >= 0");
    constexpr double a = 1.5;
    const double gamma_a = std::sqrt(pi) / 2;
    if (x == 0.0) return gamma_a;
    const double prefactor_log = a * std::log(x) - x;

    if (x < a + 1.0) {
        // Lower gamma by its power series, then subtract.
        double term = 1.0 / a, sum = term, ap = a;
        for (int k = 0; k < 500; ++k) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * eps) break;
        }
        return gamma_a - sum * std::exp(prefactor_log);
    }

    // Continued fraction for the upper gamma (modified Lentz).
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < eps) break;
    }
    return std::exp(prefactor_log) * h;
}

double gamma_tail_argument(std::int64_t n) {
    const double nd = static_cast<double>(n);
    return constants::c_decay * nd * nd * nd / ((3 * nd + 2) * (3 * nd + 2));
}

BoundCertificate certify_gamma_tail() {
    BoundCertificate c;
    c.bound_id = "gamma_tail";
    c.n = constants::n_threshold;
    const double v0 = gamma_tail_argument(constants::n_threshold);
    const double tail = gamma_tail(v0);
    c.grid = {v0, v0, 1};
    c.argmin = v0;
    c.min_margin = constants::gamma_tail_bound - tail;
    c.error_budget = 1e-6 * tail;
    const double constant = (std::sqrt(pi) / 2 - constants::gamma_tail_bound) /
                            (2 * std::pow(constants::c_decay, 1.5));
    const bool constant_ok = constant - constants::i1_coefficient > 1e-12;
    c.passed = c.min_margin > c.error_budget && constant_ok;
    c.details = "tail(" + fmt(v0) + ") = " + fmt(tail) + "; (sqrt(pi)/2 - 1.29e-30)/(2 c^1.5) = " + fmt(constant) +
                (constant_ok ? " >= 0.0583" : " < 0.0583");
    return c;
}

BoundCertificate i2_ratio_check(std::int64_t n, double mu, const IntegralOptions& options) {
    if (n < 1) throw std::invalid_argument("i2_ratio_check: n must be >= 1");
    BoundCertificate c;
    c.bound_id = "I2_ratio";
    c.n = n;
    c.mu = mu;
    c.argmin = mu;
    c.grid = {0.0, pi / 2, 0};

    std::string flags;
    if (n < constants::n_threshold) flags += "; exploratory: n below 168";
    const double d = degree_d(n);
    const bool integral_mu = std::floor(mu) == mu;
    if (!integral_mu || std::fmod(d - mu, 2.0) != 0.0) flags += "; non-coefficient probe (mu not integer or wrong parity)";
    if (mu < 0.0 || mu > 6.0 * static_cast<double>(n) + 3.0) flags += "; mu outside [0, 6n+3]";

    if (mu == 0.0) {
        c.passed = true;
        c.vacuous = true;
        c.min_margin = 0.0;
        c.error_budget = 0.0;
        c.details = "integrand vanishes identically at mu = 0" + flags;
        return c;
    }

    const double split = pi / (6.0 * static_cast<double>(n) + 4.0);
    const QuadratureResult i1 = quad_I(n, mu, 0.0, split, options);
    const QuadratureResult i2 = quad_I(n, mu, split, pi / 2, options);
    const double f = f_value(n);
    const auto nodes = static_cast<std::int64_t>(options.quadrature.order);
    c.grid.points = static_cast<std::int64_t>(i1.panels + i2.panels) * nodes;

    const double ratio_margin = f * i1.value - std::abs(i2.value);
    const double ratio_budget = f * i1.abs_error_estimate + i2.abs_error_estimate;
    bool ok = ratio_margin > ratio_budget;
    c.min_margin = ratio_margin;
    c.error_budget = ratio_budget;

    std::string lb_text;
    if (n >= constants::n_threshold) {
        const double lb = i1_lower_bound(n, mu);
        const double lb_margin = i1.value - lb;
        const double lb_budget = i1.abs_error_estimate;
        ok = ok && lb_margin > lb_budget;
        if (lb_margin - lb_budget < ratio_margin - ratio_budget) {
            c.min_margin = lb_margin;
            c.error_budget = lb_budget;
        }
        lb_text = ", I1 lower bound " + fmt(lb) + " (margin " + fmt(lb_margin) + ")";
    }
    c.passed = ok;
    c.details = "I1 = " + fmt(i1.value) + " +- " + fmt(i1.abs_error_estimate) + ", I2 = " + fmt(i2.value) + " +- " +
                fmt(i2.abs_error_estimate) + ", f(n) = " + fmt(f) + ", |I2| <= f I1 margin " + fmt(ratio_margin) +
                lb_text + flags;
    return c;
}

}  // namespace unimod
