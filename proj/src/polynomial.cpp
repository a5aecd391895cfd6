#include "unimod/polynomial.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "unimod/errors.hpp"

namespace unimod {

Polynomial::Polynomial() : coeffs_(1) {}

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

Polynomial Polynomial::one() { return Polynomial{1}; }

void Polynomial::normalize() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.emplace_back(0);
}

Polynomial mul_binomial(Polynomial p, Sign sign, std::size_t a) {
    if (a == 0) throw std::invalid_argument("mul_binomial: exponent must be positive");
    if (p.is_zero()) return p;

    std::vector<BigInt> buf(p.coeffs().begin(), p.coeffs().end());
    buf.resize(buf.size() + a);
    // Top-down: buf[m - a] still holds the original coefficient when read.
    for (std::size_t m = buf.size() - 1; m >= a; --m) {
        if (sign == Sign::plus)
            buf[m] += buf[m - a];
        else
            buf[m] -= buf[m - a];
    }
    return Polynomial(std::move(buf));
}

BigInt coeff(const Polynomial& p, std::int64_t m) {
    if (m < 0 || static_cast<std::uint64_t>(m) > p.degree()) return 0;
    return p[static_cast<std::size_t>(m)];
}

BigInt evaluate_at_one(const Polynomial& p) {
    BigInt sum = 0;
    for (const auto& c : p.coeffs()) sum += c;
    return sum;
}

BigInt evaluate_at_minus_one(const Polynomial& p) {
    BigInt sum = 0;
    const auto cs = p.coeffs();
    for (std::size_t m = 0; m < cs.size(); ++m) {
        if (m % 2 == 0)
            sum += cs[m];
        else
            sum -= cs[m];
    }
    return sum;
}

DivisionResult divide(const Polynomial& numerator, const Polynomial& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("divide: division by zero polynomial");
    const BigInt& lead = divisor[divisor.degree()];
    if (lead != 1 && lead != -1)
        throw std::invalid_argument("divide: divisor must have leading coefficient +1 or -1");

    const std::size_t dd = divisor.degree();
    if (numerator.degree() < dd || numerator.is_zero()) return {Polynomial(), numerator};

    std::vector<BigInt> rem(numerator.coeffs().begin(), numerator.coeffs().end());
    std::vector<BigInt> quot(numerator.degree() - dd + 1);
    const bool negative_lead = lead < 0;
    BigInt t;
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt& q = quot[k];
        q = rem[k + dd];
        if (negative_lead) q = -q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            if (divisor[j] == 0) continue;
            t = q * divisor[j];
            rem[k + j] -= t;
        }
    }
    rem.resize(dd == 0 ? 1 : dd);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

void write_coefficients(std::ostream& out, const Polynomial& p) {
    const auto cs = p.coeffs();
    for (std::size_t m = 0; m < cs.size(); ++m) out << m << ',' << cs[m].get_str() << '\n';
}

Polynomial read_coefficients(std::istream& in) {
    std::vector<BigInt> coeffs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw FormatError("line " + std::to_string(lineno) + ": missing comma");
        const std::string index = line.substr(0, comma);
        const std::string value = line.substr(comma + 1);
        if (index != std::to_string(coeffs.size()))
            throw FormatError("line " + std::to_string(lineno) + ": expected index " +
                              std::to_string(coeffs.size()) + ", got '" + index + "'");
        BigInt c;
        if (value.empty() || c.set_str(value, 10) != 0)
            throw FormatError("line " + std::to_string(lineno) + ": bad integer '" + value + "'");
        coeffs.push_back(std::move(c));
    }
    if (coeffs.empty()) throw FormatError("empty coefficient dump");
    return Polynomial(std::move(coeffs));
}

}  // namespace unimod
