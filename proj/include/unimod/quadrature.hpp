#pragma once

// Composite Gauss-Legendre quadrature with a refinement-based error estimate.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace unimod {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

/// Nodes and weights of the `order`-point rule (Newton iteration on P_order).
[[nodiscard]] GaussLegendreRule gauss_legendre(std::size_t order);

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t panels = 0;
    /// Sum of w*|f| on the fine grid; scale for the rounding part of the estimate.
    double l1_norm = 0.0;
};

struct QuadratureOptions {
    std::size_t order = 10;
    /// Upper limit on the fine-grid panel count.
    std::size_t max_panels = std::size_t{1} << 22;
    /// Relative error of one integrand evaluation.
    double relative_eval_error = 64 * 2.220446049250313e-16;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Evaluates the integrand at every abscissa of one panel: out[i] = f(x[i]).
using BatchIntegrand = std::function<void(std::span<const double> x, std::span<double> out)>;

/// Integrates f over [a, b] with equal panels no wider than max_width. The
/// coarse pass uses the smallest admissible panel count N, the reported value
/// comes from 2N panels, and the estimate is |fine - coarse| plus a rounding
/// term relative_eval_error * l1_norm. Throws GridTooCoarse when 2N exceeds
/// max_panels. f must be safe to call concurrently.
[[nodiscard]] QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                                         double max_width, const QuadratureOptions& options = {});
[[nodiscard]] QuadratureResult integrate(const BatchIntegrand& f, double a, double b, double max_width,
                                         const QuadratureOptions& options = {});

}  // namespace unimod
