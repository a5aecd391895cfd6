#include "unimod/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "unimod/errors.hpp"

namespace unimod {

GaussLegendreRule gauss_legendre(std::size_t order) {
    if (order == 0) throw std::invalid_argument("gauss_legendre: order must be positive");
    GaussLegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const std::size_t half = (order + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(order) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t j = 1; j <= order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * static_cast<double>(j) - 1.0) * z * p1 - (static_cast<double>(j) - 1.0) * p2) /
                     static_cast<double>(j);
            }
            dp = static_cast<double>(order) * (z * p0 - p1) / (z * z - 1.0);
            const double z_old = z;
            z = z_old - p0 / dp;
            if (std::abs(z - z_old) <= 4 * std::numeric_limits<double>::epsilon()) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[order - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

namespace {

constexpr std::size_t kChunk = 256;

struct PanelSums {
    double value = 0.0;
    double l1 = 0.0;
};

// Chunks have a fixed size, and partial sums are combined in chunk order, so
// the result does not depend on the thread count.
PanelSums sum_panels(const BatchIntegrand& f, const GaussLegendreRule& rule, double a, double b,
                     std::size_t panels, unsigned threads) {
    const double h = (b - a) / static_cast<double>(panels);
    const std::size_t chunks = (panels + kChunk - 1) / kChunk;
    std::vector<PanelSums> partial(chunks);

    auto work = [&](std::size_t c) {
        PanelSums s;
        const std::size_t order = rule.nodes.size();
        std::vector<double> x(order), fx(order);
        const std::size_t end = std::min(panels, (c + 1) * kChunk);
        for (std::size_t p = c * kChunk; p < end; ++p) {
            const double mid = a + (static_cast<double>(p) + 0.5) * h;
            for (std::size_t k = 0; k < order; ++k) x[k] = mid + 0.5 * h * rule.nodes[k];
            f(x, fx);
            double v = 0.0, l1 = 0.0;
            for (std::size_t k = 0; k < order; ++k) {
                v += rule.weights[k] * fx[k];
                l1 += rule.weights[k] * std::abs(fx[k]);
            }
            s.value += 0.5 * h * v;
            s.l1 += 0.5 * h * l1;
        }
        partial[c] = s;
    };

    const unsigned nthreads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
    if (nthreads == 1) {
        for (std::size_t c = 0; c < chunks; ++c) work(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < chunks; c = next++) work(c);
            });
    }

    PanelSums total;
    for (const auto& s : partial) {
        total.value += s.value;
        total.l1 += s.l1;
    }
    return total;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double max_width,
                           const QuadratureOptions& options) {
    return integrate(
        [&f](std::span<const double> x, std::span<double> out) {
            for (std::size_t i = 0; i < x.size(); ++i) out[i] = f(x[i]);
        },
        a, b, max_width, options);
}

QuadratureResult integrate(const BatchIntegrand& f, double a, double b, double max_width,
                           const QuadratureOptions& options) {
    if (!(b > a)) throw std::invalid_argument("integrate: need a < b");
    if (!(max_width > 0.0)) throw std::invalid_argument("integrate: panel width must be positive");

    const auto coarse_panels = static_cast<std::size_t>(std::ceil((b - a) / max_width));
    const std::size_t fine_panels = 2 * std::max<std::size_t>(coarse_panels, 1);
    if (fine_panels > options.max_panels)
        throw GridTooCoarse("integrate: " + std::to_string(fine_panels) + " panels needed, budget is " +
                            std::to_string(options.max_panels));

    const unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    const GaussLegendreRule rule = gauss_legendre(options.order);
    const PanelSums coarse = sum_panels(f, rule, a, b, fine_panels / 2, threads);
    const PanelSums fine = sum_panels(f, rule, a, b, fine_panels, threads);

    QuadratureResult r;
    r.value = fine.value;
    r.panels = fine_panels;
    r.l1_norm = fine.l1;
    const double summation = static_cast<double>(fine_panels * rule.nodes.size()) *
                             std::numeric_limits<double>::epsilon() * fine.l1;
    r.abs_error_estimate = std::abs(fine.value - coarse.value) + options.relative_eval_error * fine.l1 + summation;
    return r;
}

}  // namespace unimod
