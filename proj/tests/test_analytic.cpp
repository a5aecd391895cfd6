#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "unimod/analytic.hpp"
#include "unimod/errors.hpp"

using namespace unimod;

namespace {

constexpr double pi = std::numbers::pi;

double direct_cos_product(std::int64_t n, double theta) {
    long double p = 1.0L;
    for (std::int64_t k = 0; k <= n; ++k)
        p *= std::cos(static_cast<long double>(3 * k + 1) * theta) * std::cos(static_cast<long double>(3 * k + 2) * theta);
    return static_cast<double>(p);
}

// int_a^b theta sin(p theta) dtheta in closed form.
long double int_theta_sin(long double p, long double a, long double b) {
    if (p == 0.0L) return 0.0L;
    auto F = [p](long double t) { return std::sin(p * t) / (p * p) - t * std::cos(p * t) / p; };
    return F(b) - F(a);
}

// I_n(mu) over [a, b] from the exact coefficients: prod cos = 4^{-(n+1)} sum_m a(m) cos((2m - d) theta),
// and sin(mu t) cos(j t) = (sin((mu + j) t) + sin((mu - j) t)) / 2.
long double exact_I(std::int64_t n, double mu, double a, double b) {
    const auto c = oracle::expand_main(static_cast<std::size_t>(n));
    const auto d = static_cast<long double>(c.size() - 1);
    long double s = 0.0L;
    for (std::size_t m = 0; m < c.size(); ++m) {
        const long double j = 2.0L * static_cast<long double>(m) - d;
        s += c[m].get_d() * 0.5L * (int_theta_sin(mu + j, a, b) + int_theta_sin(mu - j, a, b));
    }
    return std::ldexp(s, -2 * static_cast<int>(n + 1));
}

double e_oracle(std::int64_t n, double theta) {
    long double s2 = 0.0L, s4 = 0.0L;
    for (std::int64_t j = 1; j <= 3 * n + 2; ++j) {
        if (j % 3 == 0) continue;
        const long double s = std::sin(static_cast<long double>(j) * theta);
        s2 += s * s;
        s4 += s * s * s * s;
    }
    return static_cast<double>(-s2 / 2 - s4 / 4);
}

}  // namespace

TEST_CASE("cos_product: rotation, batch and direct agree") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> td(0.0, pi / 2);
    for (std::int64_t n : {0, 1, 5, 30}) {
        std::vector<double> theta(37), out(37);
        for (auto& t : theta) t = td(rng);
        cos_product(n, theta, out);
        for (std::size_t i = 0; i < theta.size(); ++i) {
            const double direct = direct_cos_product(n, theta[i]);
            CHECK(std::abs(cos_product(n, theta[i]) - direct) <= 1e-12);
            CHECK(std::abs(out[i] - direct) <= 1e-12);
        }
    }
    CHECK(cos_product(3, 0.0) == 1.0);
    std::vector<double> a(3), b(2);
    CHECK_THROWS_AS(cos_product(1, a, b), std::invalid_argument);
}

TEST_CASE("integrand examples") {
    CHECK(integrand(0, 1.0, 0.0) == 0.0);
    CHECK(integrand(4, 0.0, 0.7) == 0.0);
    // n = 0, theta = pi/3: cos(pi/3) cos(2pi/3) = -1/4
    CHECK(integrand(0, 1.0, pi / 3) == doctest::Approx(pi / 3 * std::sin(pi / 3) * -0.25).epsilon(1e-14));
}

TEST_CASE("quad_I agrees with the exact trig-polynomial integral") {
    for (std::int64_t n : {0, 1, 2, 4}) {
        const double d = degree_d(n);
        for (double mu : {1.0, 3.0, d / 2, d}) {
            const double split = pi / (6.0 * static_cast<double>(n) + 4.0);
            for (auto [a, b] : {std::pair{0.0, pi / 2}, std::pair{0.0, split}, std::pair{split, pi / 2}}) {
                const auto r = quad_I(n, mu, a, b);
                const double exact = static_cast<double>(exact_I(n, mu, a, b));
                CHECK(std::abs(r.value - exact) <= r.abs_error_estimate + 1e-13);
            }
        }
    }
}

TEST_CASE("quad_I: mu = 0, refinement and argument checks") {
    const auto zero = quad_I(3, 0.0, 0.0, pi / 2);
    CHECK(zero.value == 0.0);

    const auto base = quad_I(6, 17.0, 0.0, pi / 2);
    IntegralOptions fine;
    fine.refine = 2.0;
    const auto refined = quad_I(6, 17.0, 0.0, pi / 2, fine);
    CHECK(std::abs(base.value - refined.value) <= base.abs_error_estimate + refined.abs_error_estimate);

    // n = 1, mu = 8 (the step from m = 1 to m = 2 in the increasing half)
    CHECK(quad_I(1, 8.0, 0.0, pi / 2).value > 0.0);

    CHECK_THROWS_AS((void)quad_I(1, 1.0, -0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)quad_I(1, 1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)quad_I(1, 1.0, 0.0, 2.0), std::invalid_argument);
    IntegralOptions coarse;
    coarse.refine = 0.5;
    CHECK_THROWS_AS((void)quad_I(1, 1.0, 0.0, 1.0, coarse), std::invalid_argument);
    IntegralOptions tight;
    tight.quadrature.max_panels = 8;
    CHECK_THROWS_AS((void)quad_I(50, 1.0, 0.0, pi / 2, tight), GridTooCoarse);
}

TEST_CASE("coefficients from the integral representation") {
    CHECK(coeff_by_integral(0, 2) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(coeff_by_integral(1, 6) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(coeff_by_integral(8, 0) == doctest::Approx(1.0).epsilon(1e-6));
    for (std::int64_t n : {2, 5}) {
        const auto c = oracle::expand_main(static_cast<std::size_t>(n));
        for (std::size_t m = 0; m < c.size(); ++m) {
            const auto r = coeff_integral(n, static_cast<std::int64_t>(m));
            CHECK(std::abs(r.value - c[m].get_d()) <= std::max(1e-6, r.abs_error_estimate));
        }
    }
    CHECK_THROWS_AS((void)coeff_by_integral(1, 13), std::invalid_argument);
    CHECK_THROWS_AS((void)coeff_by_integral(1, -1), std::invalid_argument);
}

TEST_CASE("mu_of") {
    CHECK(mu_of(1, 6).mu == 0);
    CHECK(mu_of(1, 6).in_lemma_range);
    CHECK(mu_of(1, 2).mu == 8);
    CHECK(mu_of(1, 2).in_lemma_range);
    CHECK(mu_of(1, 1).mu == 10);
    CHECK_FALSE(mu_of(1, 1).in_lemma_range);
    CHECK(mu_of(1, 8).mu < 0);
    CHECK_FALSE(mu_of(1, 8).in_lemma_range);
}

TEST_CASE("I1 lower bound") {
    CHECK(i1_lower_bound(168, 1.0) == doctest::Approx(5.6465e-12).epsilon(1e-4));
    CHECK(i1_lower_bound(168, 1.0) == doctest::Approx(0.0583 / std::exp(4.5 * std::log(168.0))).epsilon(1e-12));
    CHECK(i1_lower_bound(168, 6.0) == doctest::Approx(6 * i1_lower_bound(168, 1.0)).epsilon(1e-14));
    CHECK(i1_bound_in_domain(168, 1011));
    CHECK_FALSE(i1_bound_in_domain(168, 1012));
    CHECK_FALSE(i1_bound_in_domain(167, 1));
    CHECK_THROWS_AS((void)i1_lower_bound(0, 1.0), std::invalid_argument);
}

TEST_CASE("E exponent matches the sum-of-powers form") {
    std::mt19937_64 rng(11);
    for (std::int64_t n : {1, 4, 40, 168}) {
        std::uniform_real_distribution<double> td(pi / (6.0 * static_cast<double>(n) + 4.0), pi / 2);
        for (int i = 0; i < 50; ++i) {
            const double t = td(rng);
            CHECK(e_exponent(n, t) == doctest::Approx(e_oracle(n, t)).epsilon(1e-9));
        }
    }
    // Next to pi/6, sin(6 theta) -> 0 and the last ratio takes its limit.
    const double bound = -0.163 * 168 - 0.031;
    for (double off : {1e-6, -1e-6, 1e-9})
        CHECK(e_exponent(168, pi / 6 + off) < bound);
    CHECK_THROWS_AS((void)e_exponent(168, pi / 6), SingularPoint);
    CHECK_THROWS_AS((void)e_exponent(5, pi / 2), SingularPoint);
    CHECK(e_exponent(0, 0.5) == doctest::Approx(e_oracle(0, 0.5)).epsilon(1e-12));
    CHECK(e_exponent_error_budget(168) > 0.0);
}

TEST_CASE("E envelope certification") {
    const auto c168 = certify_E_bound(168, 2000, {}, true);
    CHECK(c168.passed());
    CHECK(c168.envelope.min_margin > c168.envelope.error_budget);
    CHECK(c168.samples.size() == 2000);
    CHECK(c168.envelope.grid.lo == doctest::Approx(pi / (6 * 168 + 4)));
    CHECK(c168.envelope.grid.hi == doctest::Approx(pi / 2));
    for (const auto& s : c168.samples) CHECK(s.exponent < s.bound);

    const auto c1000 = certify_E_bound(1000, 2000);
    CHECK(c1000.passed());
    CHECK(c1000.envelope.min_margin > c168.envelope.min_margin);

    // The true maximum at n = 168 is near -100, so a slope of 0.20 still holds
    // and 0.65 does not.
    CHECK(certify_E_bound(168, 2000, {0.20, 0.0}).envelope.passed);
    const auto steep = certify_E_bound(168, 2000, {0.65, 0.0});
    CHECK_FALSE(steep.envelope.passed);
    CHECK(steep.envelope.min_margin < 0.0);

    CHECK(certify_E_bound(168, 2000).samples.empty());
    CHECK_THROWS_AS((void)certify_E_bound(168, 999), std::invalid_argument);
    CHECK_THROWS_AS((void)certify_E_bound(0, 2000), std::invalid_argument);
}

TEST_CASE("f chain") {
    CHECK(f_value(168) == doctest::Approx(0.8502379468).epsilon(1e-8));
    CHECK(f_value(168) < constants::f_ceiling);
    CHECK(f_log_value(168) == doctest::Approx(std::log(f_value(168))).epsilon(1e-13));
    CHECK(f_log_derivative(168) <= -0.13);
    CHECK(f_log_derivative(1000000) == doctest::Approx(-0.163).epsilon(1e-4));
    for (std::int64_t n : {200, 1000, 4000}) {
        const double fd = (f_log_value(n + 1) - f_log_value(n - 1)) / 2;
        CHECK(f_log_derivative(n) == doctest::Approx(fd).epsilon(1e-6));
    }
    CHECK(f_value(5000) == 0.0);
    CHECK(std::isfinite(f_log_value(5000)));

    const auto chain = certify_f_chain(168, 5000);
    CHECK(chain.passed());
    CHECK(chain.below_ceiling.argmin == 168);
    // Below the threshold f is not yet under 0.851.
    CHECK_FALSE(certify_f_chain(150, 5000).below_ceiling.passed);
    CHECK_THROWS_AS((void)certify_f_chain(10, 9), std::invalid_argument);
}

TEST_CASE("incomplete gamma tail") {
    auto closed = [](double x) { return std::sqrt(x) * std::exp(-x) + std::sqrt(pi) / 2 * std::erfc(std::sqrt(x)); };
    CHECK(gamma_tail(0.0) == doctest::Approx(std::sqrt(pi) / 2).epsilon(1e-14));
    double prev = gamma_tail(0.0);
    for (double x = 0.05; x < 80.0; x += 0.37) {
        const double g = gamma_tail(x);
        CHECK(g == doctest::Approx(closed(x)).epsilon(1e-10));
        CHECK(g < prev);
        prev = g;
    }
    const double v0 = gamma_tail_argument(168);
    CHECK(v0 == doctest::Approx(70.966324).epsilon(1e-7));
    const double tail = gamma_tail(v0);
    CHECK(tail <= 1.29e-30);
    CHECK(tail == doctest::Approx(1.283132e-30).epsilon(1e-6));
    CHECK(tail == doctest::Approx(closed(v0)).epsilon(1e-10));
    CHECK(certify_gamma_tail().passed);
    CHECK_THROWS_AS((void)gamma_tail(-1.0), std::invalid_argument);
}

TEST_CASE("I2 / I1 ratio at n = 168") {
    const auto small = i2_ratio_check(168, 1.0);
    CHECK(small.passed);
    CHECK_FALSE(small.vacuous);
    CHECK(small.min_margin > small.error_budget);
    CHECK(small.mu.value() == 1.0);

    const auto top = i2_ratio_check(168, 1011.0);
    CHECK(top.passed);

    const auto zero = i2_ratio_check(168, 0.0);
    CHECK(zero.passed);
    CHECK(zero.vacuous);
    CHECK_FALSE(inconclusive(zero));
}

TEST_CASE("I2 / I1 ratio below the threshold is flagged") {
    const auto c = i2_ratio_check(10, 5.0);
    CHECK(c.details.find("exploratory") != std::string::npos);
    const auto odd = i2_ratio_check(10, 4.5);
    CHECK(odd.details.find("non-coefficient") != std::string::npos);
    CHECK_THROWS_AS((void)i2_ratio_check(0, 1.0), std::invalid_argument);
}
