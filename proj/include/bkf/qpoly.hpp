#pragma once

// Polynomials in q with integer coefficients. Coefficients are int64 with
// checked arithmetic; an overflow throws rather than wrapping.

#include "bkf/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bkf {

class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(std::int64_t constant);  // NOLINT: implicit on purpose, 0 and 1 read naturally
    static QPolynomial monomial(int degree, std::int64_t coeff = 1);
    static QPolynomial from_coefficients(std::vector<std::int64_t> c);

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::int64_t coefficient(int d) const {
        return d >= 0 && d < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(d)] : 0;
    }
    const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }
    bool has_nonnegative_coefficients() const;

    BigInt eval(long q) const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    /// this += sign * q^shift * o
    void add_shifted(const QPolynomial& o, int shift, int sign = 1);
    QPolynomial shifted(int k) const;

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator-(QPolynomial a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    bool operator==(const QPolynomial&) const = default;

    /// "0", "q", "2*q^2 + q^3", "1 - q".
    std::string to_string() const;
    /// Inverse of to_string; also accepts "c*q^d" terms in any order.
    static QPolynomial parse(const std::string& s);

private:
    void trim();
    std::vector<std::int64_t> c_;  // c_[d] = coefficient of q^d; no trailing zeros
};

}  // namespace bkf
