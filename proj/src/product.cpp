#include "unimod/product.hpp"

#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "unimod/checksum.hpp"
#include "unimod/errors.hpp"

namespace unimod {

GeneralFamily odd_parts_family(std::size_t n) {
    GeneralFamily f;
    for (std::size_t k = 1; k <= n; ++k) f.factors.push_back({Sign::plus, 2 * k - 1});
    return f;
}

GeneralFamily borwein_family(std::size_t n) {
    GeneralFamily f;
    for (std::size_t k = 0; k <= n; ++k) {
        f.factors.push_back({Sign::minus, 3 * k + 1});
        f.factors.push_back({Sign::minus, 3 * k + 2});
    }
    return f;
}

void validate(const ProductSpec& spec) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GeneralFamily>) {
                for (const auto& f : s.factors)
                    if (f.exponent == 0)
                        throw std::invalid_argument("general product: exponents must be positive");
            } else if constexpr (std::is_same_v<T, AlmkvistFamily>) {
                if (s.r < 2) throw std::invalid_argument("almkvist product: r must be >= 2");
                if (s.n < 1) throw std::invalid_argument("almkvist product: n must be >= 1");
            }
        },
        spec);
}

namespace {

Polynomial build_main(const MainFamily& s) {
    Polynomial p = Polynomial::one();
    for (std::size_t k = 0; k <= s.n; ++k) {
        p = mul_binomial(std::move(p), Sign::plus, 3 * k + 1);
        p = mul_binomial(std::move(p), Sign::plus, 3 * k + 2);
    }
    return p;
}

Polynomial build_general(const GeneralFamily& s) {
    Polynomial p = Polynomial::one();
    for (const auto& f : s.factors) p = mul_binomial(std::move(p), f.sign, f.exponent);
    return p;
}

Polynomial build_almkvist(const AlmkvistFamily& s) {
    Polynomial p = Polynomial::one();
    for (std::size_t k = 1; k <= s.n; ++k) p = mul_binomial(std::move(p), Sign::minus, s.r * k);
    // (1 - q^k) divides (1 - q^{rk}), so every partial quotient is exact.
    for (std::size_t k = 1; k <= s.n; ++k) {
        const Polynomial divisor = mul_binomial(Polynomial::one(), Sign::minus, k);
        auto [quotient, remainder] = divide(p, divisor);
        if (!remainder.is_zero())
            throw AlmkvistDivisionInexact("almkvist r=" + std::to_string(s.r) +
                                          " n=" + std::to_string(s.n) +
                                          ": nonzero remainder dividing by 1-q^" + std::to_string(k));
        p = std::move(quotient);
    }
    return p;
}

}  // namespace

Polynomial build_product(const ProductSpec& spec) {
    validate(spec);
    return std::visit(
        [](const auto& s) -> Polynomial {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, MainFamily>)
                return build_main(s);
            else if constexpr (std::is_same_v<T, GeneralFamily>)
                return build_general(s);
            else
                return build_almkvist(s);
        },
        spec);
}

Polynomial recurrence_step(const Polynomial& prev, std::size_t n) {
    if (n == 0) throw std::invalid_argument("recurrence_step: n must be >= 1");
    const std::uint64_t expected = main_degree(n - 1);
    if (prev.degree() != expected)
        throw DegreeMismatch("recurrence_step: B_{n-1} must have degree " + std::to_string(expected) +
                             ", got " + std::to_string(prev.degree()));

    const std::size_t d = main_degree(n);
    const std::size_t s1 = 3 * n + 1;
    const std::size_t s2 = 3 * n + 2;
    const std::size_t s3 = 6 * n + 3;
    const std::size_t top = prev.degree();
    const auto a = prev.coeffs();

    std::vector<BigInt> next(d + 1);
    for (std::size_t m = 0; m <= d; ++m) {
        BigInt& c = next[m];
        if (m <= top) c = a[m];
        if (m >= s1 && m - s1 <= top) c += a[m - s1];
        if (m >= s2 && m - s2 <= top) c += a[m - s2];
        if (m >= s3 && m - s3 <= top) c += a[m - s3];
    }
    return Polynomial(std::move(next));
}

std::string family_key(const ProductSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, MainFamily>) {
                return "main_" + std::to_string(s.n);
            } else if constexpr (std::is_same_v<T, AlmkvistFamily>) {
                return "almkvist_r" + std::to_string(s.r) + "_n" + std::to_string(s.n);
            } else {
                std::string desc;
                for (const auto& f : s.factors)
                    desc += (f.sign == Sign::plus ? '+' : '-') + std::to_string(f.exponent) + ';';
                return "general_" + to_hex(fnv1a64(desc));
            }
        },
        spec);
}

}  // namespace unimod
