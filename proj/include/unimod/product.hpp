#pragma once

// Product families of binomial factors and the four-term recurrence for the
// main family B_n(q) = prod_{k=0}^{n} (1 + q^{3k+1})(1 + q^{3k+2}).

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "unimod/polynomial.hpp"

namespace unimod {

/// B_n: factor pairs k = 0..n.
struct MainFamily {
    std::size_t n = 0;
};

/// One factor (1 + sign*q^exponent) of a general product.
struct BinomialFactor {
    Sign sign = Sign::plus;
    std::size_t exponent = 1;
};

struct GeneralFamily {
    std::vector<BinomialFactor> factors;
};

/// prod_{k=1}^{n} (1 - q^{rk}) / (1 - q^k).
struct AlmkvistFamily {
    std::size_t r = 2;
    std::size_t n = 1;
};

using ProductSpec = std::variant<MainFamily, GeneralFamily, AlmkvistFamily>;

/// d_n = 3(n+1)^2, the degree of B_n.
[[nodiscard]] constexpr std::uint64_t main_degree(std::uint64_t n) noexcept {
    return 3 * (n + 1) * (n + 1);
}

/// prod_{k=1}^{n} (1 + q^{2k-1}), the odd-part product.
[[nodiscard]] GeneralFamily odd_parts_family(std::size_t n);

/// prod_{k=0}^{n} (1 - q^{3k+1})(1 - q^{3k+2}), the Borwein product.
[[nodiscard]] GeneralFamily borwein_family(std::size_t n);

/// Throws std::invalid_argument for zero exponents or r < 2 / n < 1.
void validate(const ProductSpec& spec);

/// Expands the product exactly. Throws AlmkvistDivisionInexact if a
/// quotient leaves a remainder.
[[nodiscard]] Polynomial build_product(const ProductSpec& spec);

/// B_n from B_{n-1} via
///   a_n(m) = a_{n-1}(m) + a_{n-1}(m-3n-1) + a_{n-1}(m-3n-2) + a_{n-1}(m-6n-3).
/// Throws DegreeMismatch unless prev.degree() == 3n^2. Requires n >= 1.
[[nodiscard]] Polynomial recurrence_step(const Polynomial& prev, std::size_t n);

/// Short key such as "main_12" or "almkvist_r3_n20", used for cache files
/// and report labels.
[[nodiscard]] std::string family_key(const ProductSpec& spec);

}  // namespace unimod
