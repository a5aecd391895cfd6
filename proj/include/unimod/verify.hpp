#pragma once

// Exact combinatorial checks on coefficient sequences.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unimod/polynomial.hpp"

namespace unimod {

/// Outcome of one combinatorial check. `passed` is true exactly when
/// `first_violation` is empty.
struct CheckReport {
    std::string kind;
    bool passed = true;
    std::optional<std::int64_t> first_violation;
    std::optional<std::int64_t> mode_lo;
    std::optional<std::int64_t> mode_hi;
    std::optional<std::int64_t> n;
    std::string details;

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// a_j == a_{N-j} for all j. first_violation is the smallest failing j.
[[nodiscard]] CheckReport check_symmetric(const Polynomial& p);

/// Weak rise then weak fall. On success the mode is the closed interval
/// [mode_lo, mode_hi] of maximal coefficients; on failure first_violation is
/// the first index that rises again after a fall.
[[nodiscard]] CheckReport check_unimodal(const Polynomial& p);

/// The integer interval [ceil(3n^2/2), floor(3(n+1)^2/2)].
struct IndexRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
};
[[nodiscard]] IndexRange lemma_range(std::int64_t n);

/// a_n(m) >= a_n(m-1) over lemma_range(n). Throws DegreeMismatch unless
/// p has degree 3(n+1)^2, std::invalid_argument for n < 1.
[[nodiscard]] CheckReport check_lemma_range(std::int64_t n, const Polynomial& p);

/// Rebuilds B_0..B_{n_max} through recurrence_step and, for each n, checks
/// symmetry, monotonicity on 1 <= m <= floor(d_{n-1}/2), and the lemma range
/// ceil(d_{n-1}/2) <= m <= floor(d_n/2). Only two polynomials are live at once.
/// A failure reports the offending n and m.
[[nodiscard]] CheckReport replay_induction(std::int64_t n_max);

/// Period-wise sign constraints. '+' requires coefficient >= 0, '-' requires
/// <= 0; zero satisfies both. Throws std::invalid_argument for an empty
/// pattern or characters other than '+' and '-'.
[[nodiscard]] CheckReport check_sign_pattern(const Polynomial& p, std::string_view pattern);
[[nodiscard]] CheckReport check_sign_pattern(const Polynomial& p, std::span<const Sign> pattern);

/// Unimodality of the window b(A)..b(N-A). With A = 0 the verdict matches
/// check_unimodal. On failure first_violation is the bottom of the first dip
/// (the leftmost minimal index of the valley that breaks unimodality), in
/// original indexing. Throws std::invalid_argument if 2A > N.
[[nodiscard]] CheckReport check_almost_unimodal(const Polynomial& p, std::size_t A);

}  // namespace unimod
