#pragma once

#include <string>
#include <vector>

#include "qtrace/rational.hpp"

namespace qtrace::zoo {

/// Dense polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. The leading coefficient is nonzero unless the polynomial is zero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);

    /// x^d - 1
    static IntPolynomial x_power_minus_one(unsigned d);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    Integer evaluate(const Integer& x) const;

    /// Coefficients of p(x0 + u) in u, by repeated synthetic division.
    IntPolynomial taylor_shift(const Integer& x0) const;

    /// Exact quotient; throws std::domain_error if the divisor does not divide
    /// or its leading coefficient is not +-1.
    IntPolynomial exact_divide(const IntPolynomial& divisor) const;

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string str() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

} // namespace qtrace::zoo
