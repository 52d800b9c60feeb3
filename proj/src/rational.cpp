#include "qtrace/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qtrace {

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto parse_int = [](std::string_view s) {
        Integer v;
        if (s.empty() || v.set_str(std::string(s), 10) != 0)
            throw std::invalid_argument("not a decimal integer: '" + std::string(s) + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        if (is_zero())
            throw std::domain_error("zero to a negative power");
        return (Rational(1) / *this).pow(-exponent);
    }
    auto e = static_cast<unsigned long>(exponent);
    return Rational(ipow(value_.get_num(), e), ipow(value_.get_den(), e));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long k)
{
    if (k < 0)
        return 0;
    if (n >= 0 && k > n)
        return 0;
    // mpz_bin_ui handles negative n by the usual extension.
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Integer ipow(const Integer& base, unsigned long exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

} // namespace qtrace
