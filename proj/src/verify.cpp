#include "unimod/verify.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "unimod/errors.hpp"
#include "unimod/product.hpp"

namespace unimod {

namespace {

using Coeffs = std::span<const BigInt>;

struct ShapeScan {
    bool unimodal = true;
    std::size_t violation = 0;  // first index rising again after a fall
    std::size_t trough = 0;     // leftmost index of the valley bottom before `violation`
    std::size_t mode_lo = 0;
    std::size_t mode_hi = 0;
    bool strict = true;
};

// Scans c[lo..hi] (inclusive) for weak rise-then-fall.
ShapeScan scan_shape(Coeffs c, std::size_t lo, std::size_t hi) {
    ShapeScan s;
    std::size_t i = lo + 1;
    while (i <= hi && c[i] >= c[i - 1]) ++i;
    const std::size_t fall_start = i - 1;
    while (i <= hi && c[i] <= c[i - 1]) ++i;
    if (i <= hi) {
        s.unimodal = false;
        s.violation = i;
        std::size_t j = i - 1;
        while (j > fall_start && c[j - 1] == c[i - 1]) --j;
        s.trough = j;
        return s;
    }

    s.mode_lo = lo;
    for (std::size_t m = lo + 1; m <= hi; ++m)
        if (c[m] > c[s.mode_lo]) s.mode_lo = m;
    s.mode_hi = s.mode_lo;
    while (s.mode_hi < hi && c[s.mode_hi + 1] == c[s.mode_lo]) ++s.mode_hi;

    for (std::size_t m = lo + 1; m <= s.mode_lo && s.strict; ++m) s.strict = c[m] > c[m - 1];
    for (std::size_t m = s.mode_hi + 1; m <= hi && s.strict; ++m) s.strict = c[m] < c[m - 1];
    return s;
}

// First m in [lo, hi] with c[m] < c[m-1], treating out-of-range entries as 0.
std::optional<std::int64_t> first_descent(const Polynomial& p, std::int64_t lo, std::int64_t hi) {
    const auto deg = static_cast<std::int64_t>(p.degree());
    for (std::int64_t m = lo; m <= hi; ++m) {
        const bool below = (m >= 1 && m <= deg) ? p[m] < p[m - 1] : coeff(p, m) < coeff(p, m - 1);
        if (below) return m;
    }
    return std::nullopt;
}

std::string range_text(std::int64_t lo, std::int64_t hi) {
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

}  // namespace

CheckReport check_symmetric(const Polynomial& p) {
    CheckReport r{.kind = "symmetric"};
    const auto c = p.coeffs();
    const std::size_t N = p.degree();
    for (std::size_t j = 0; j <= N / 2; ++j) {
        if (c[j] != c[N - j]) {
            r.passed = false;
            r.first_violation = static_cast<std::int64_t>(j);
            r.details = "a_" + std::to_string(j) + " = " + c[j].get_str() + " != a_" +
                        std::to_string(N - j) + " = " + c[N - j].get_str();
            return r;
        }
    }
    r.details = "palindromic of degree " + std::to_string(N);
    return r;
}

CheckReport check_unimodal(const Polynomial& p) {
    CheckReport r{.kind = "unimodal"};
    const ShapeScan s = scan_shape(p.coeffs(), 0, p.degree());
    if (!s.unimodal) {
        r.passed = false;
        r.first_violation = static_cast<std::int64_t>(s.violation);
        r.details = "coefficient rises again at m=" + std::to_string(s.violation) + " after a fall";
        return r;
    }
    r.mode_lo = static_cast<std::int64_t>(s.mode_lo);
    r.mode_hi = static_cast<std::int64_t>(s.mode_hi);
    r.details = "mode " + range_text(*r.mode_lo, *r.mode_hi) + (s.strict ? ", strict" : ", not strict");
    return r;
}

IndexRange lemma_range(std::int64_t n) {
    // ceil(3n^2/2) and floor(3(n+1)^2/2)
    return {(3 * n * n + 1) / 2, (3 * (n + 1) * (n + 1)) / 2};
}

CheckReport check_lemma_range(std::int64_t n, const Polynomial& p) {
    if (n < 1) throw std::invalid_argument("check_lemma_range: n must be >= 1");
    const auto d = main_degree(static_cast<std::uint64_t>(n));
    if (p.degree() != d)
        throw DegreeMismatch("check_lemma_range: expected degree " + std::to_string(d) + ", got " +
                             std::to_string(p.degree()));

    CheckReport r{.kind = "lemma", .n = n};
    const IndexRange range = lemma_range(n);
    if (auto m = first_descent(p, range.lo, range.hi)) {
        r.passed = false;
        r.first_violation = *m;
        r.details = "a_n(m) < a_n(m-1) at m=" + std::to_string(*m) + " in " + range_text(range.lo, range.hi);
    } else {
        r.details = "a_n(m) >= a_n(m-1) on " + range_text(range.lo, range.hi);
    }
    return r;
}

CheckReport replay_induction(std::int64_t n_max) {
    if (n_max < 0) throw std::invalid_argument("replay_induction: n_max must be >= 0");
    CheckReport r{.kind = "induction"};

    auto fail = [&r](std::int64_t n, std::int64_t m, const std::string& what) {
        r.passed = false;
        r.n = n;
        r.first_violation = m;
        r.details = what + " fails for B_" + std::to_string(n) + " at m=" + std::to_string(m);
        return r;
    };

    Polynomial current = build_product(MainFamily{0});
    for (std::int64_t n = 0; n <= n_max; ++n) {
        if (n > 0) current = recurrence_step(current, static_cast<std::size_t>(n));
        const auto d = static_cast<std::int64_t>(main_degree(static_cast<std::uint64_t>(n)));

        const CheckReport sym = check_symmetric(current);
        if (!sym.passed) return fail(n, *sym.first_violation, "symmetry");

        if (n == 0) {
            if (auto m = first_descent(current, 1, d / 2)) return fail(n, *m, "base case monotonicity");
            continue;
        }
        const std::int64_t d_prev = 3 * n * n;
        if (auto m = first_descent(current, 1, d_prev / 2)) return fail(n, *m, "inherited monotonicity");
        if (auto m = first_descent(current, (d_prev + 1) / 2, d / 2)) return fail(n, *m, "lemma range");
    }
    r.n = n_max;
    r.details = "B_0..B_" + std::to_string(n_max) + " symmetric and non-decreasing up to the centre";
    return r;
}

CheckReport check_sign_pattern(const Polynomial& p, std::span<const Sign> pattern) {
    if (pattern.empty()) throw std::invalid_argument("check_sign_pattern: empty pattern");
    CheckReport r{.kind = "sign_pattern"};
    const auto c = p.coeffs();
    for (std::size_t m = 0; m < c.size(); ++m) {
        const int s = sgn(c[m]);
        const Sign want = pattern[m % pattern.size()];
        if ((want == Sign::plus && s < 0) || (want == Sign::minus && s > 0)) {
            r.passed = false;
            r.first_violation = static_cast<std::int64_t>(m);
            r.details = "coefficient of q^" + std::to_string(m) + " is " + c[m].get_str() + ", expected " +
                        (want == Sign::plus ? ">= 0" : "<= 0");
            return r;
        }
    }
    r.details = "pattern of period " + std::to_string(pattern.size()) + " holds through degree " +
                std::to_string(p.degree());
    return r;
}

CheckReport check_sign_pattern(const Polynomial& p, std::string_view pattern) {
    std::vector<Sign> signs;
    signs.reserve(pattern.size());
    for (char ch : pattern) {
        if (ch == '+')
            signs.push_back(Sign::plus);
        else if (ch == '-')
            signs.push_back(Sign::minus);
        else
            throw std::invalid_argument("check_sign_pattern: pattern may contain only '+' and '-'");
    }
    CheckReport r = check_sign_pattern(p, std::span<const Sign>(signs));
    r.details = "pattern " + std::string(pattern) + ": " + r.details;
    return r;
}

CheckReport check_almost_unimodal(const Polynomial& p, std::size_t A) {
    const std::size_t N = p.degree();
    if (2 * A > N) throw std::invalid_argument("check_almost_unimodal: A exceeds degree/2");

    CheckReport r{.kind = "almost_unimodal"};
    const ShapeScan s = scan_shape(p.coeffs(), A, N - A);
    const std::string window = "window " + range_text(static_cast<std::int64_t>(A), static_cast<std::int64_t>(N - A));
    if (!s.unimodal) {
        r.passed = false;
        r.first_violation = static_cast<std::int64_t>(s.trough);
        r.details = window + ": dip at m=" + std::to_string(s.trough) + ", rises again at m=" +
                    std::to_string(s.violation);
        return r;
    }
    r.mode_lo = static_cast<std::int64_t>(s.mode_lo);
    r.mode_hi = static_cast<std::int64_t>(s.mode_hi);
    // K = N/2 or (N+1)/2: the peak plateau should contain a central index.
    const bool centred = s.mode_lo <= (N + 1) / 2 && s.mode_hi >= N / 2;
    r.details = window + ": mode " + range_text(*r.mode_lo, *r.mode_hi) +
                (centred ? ", peak at centre" : ", peak off centre");
    return r;
}

}  // namespace unimod
