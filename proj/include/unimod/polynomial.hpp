#pragma once

// Dense integer polynomials in one variable q with arbitrary-precision
// coefficients. Index m of the coefficient vector holds the coefficient of q^m.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace unimod {

using BigInt = mpz_class;

enum class Sign : int { plus = 1, minus = -1 };

/// Dense coefficient sequence. The last stored coefficient is nonzero except
/// for the zero polynomial, which is stored as the single coefficient 0.
class Polynomial {
public:
    /// The zero polynomial.
    Polynomial();
    explicit Polynomial(std::vector<BigInt> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial one();

    [[nodiscard]] std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }
    [[nodiscard]] std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] const BigInt& operator[](std::size_t m) const { return coeffs_[m]; }

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

/// p * (1 + sign*q^a). Requires a >= 1. Accumulates in place from the top
/// coefficient down, so no general convolution is performed.
[[nodiscard]] Polynomial mul_binomial(Polynomial p, Sign sign, std::size_t a);

/// Coefficient of q^m; zero outside [0, degree].
[[nodiscard]] BigInt coeff(const Polynomial& p, std::int64_t m);

[[nodiscard]] BigInt evaluate_at_one(const Polynomial& p);
[[nodiscard]] BigInt evaluate_at_minus_one(const Polynomial& p);

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Schoolbook long division over the integers. The divisor's leading
/// coefficient must be +1 or -1 so every quotient coefficient is integral.
[[nodiscard]] DivisionResult divide(const Polynomial& numerator, const Polynomial& divisor);

/// Coefficient dump: one `m,<decimal>` line per coefficient, ascending m.
void write_coefficients(std::ostream& out, const Polynomial& p);

/// Parses a coefficient dump. Throws FormatError on malformed or
/// out-of-order lines.
[[nodiscard]] Polynomial read_coefficients(std::istream& in);

}  // namespace unimod
