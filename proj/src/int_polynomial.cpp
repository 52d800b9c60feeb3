#include "qtrace/int_polynomial.hpp"

#include <stdexcept>

namespace qtrace::zoo {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_power_minus_one(unsigned d)
{
    std::vector<Integer> c(d + 1, 0);
    c[0] = -1;
    c[d] += 1;
    return IntPolynomial(std::move(c));
}

Integer IntPolynomial::evaluate(const Integer& x) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::taylor_shift(const Integer& x0) const
{
    // Horner's scheme applied n times: after pass i, c[i] is the i-th Taylor coefficient.
    std::vector<Integer> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j)
            c[j - 1] += x0 * c[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::exact_divide(const IntPolynomial& divisor) const
{
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    const Integer& lead = divisor.coeffs_.back();
    if (lead != 1 && lead != -1)
        throw std::domain_error("exact_divide needs a divisor with unit leading coefficient");
    if (degree() < divisor.degree()) {
        if (!is_zero())
            throw std::domain_error("polynomial does not divide");
        return IntPolynomial();
    }
    std::vector<Integer> rem = coeffs_;
    const std::size_t dq = coeffs_.size() - divisor.coeffs_.size();
    std::vector<Integer> quot(dq + 1, 0);
    for (std::size_t i = dq + 1; i-- > 0;) {
        Integer q = rem[i + divisor.coeffs_.size() - 1] * lead; // lead is its own inverse
        quot[i] = q;
        for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
            rem[i + j] -= q * divisor.coeffs_[j];
    }
    for (const auto& r : rem)
        if (r != 0)
            throw std::domain_error("polynomial does not divide");
    return IntPolynomial(std::move(quot));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return IntPolynomial();
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Integer& c = coeffs_[i];
        if (c == 0)
            continue;
        Integer mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1 || i == 0)
            out += mag.get_str();
        if (i >= 1)
            out += "x";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace qtrace::zoo
