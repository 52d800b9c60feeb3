#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qtrace {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq so that generic series code sees a plain
/// type rather than gmpxx expression templates.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) : value_(Integer(static_cast<long>(v))) {}

    explicit Rational(const Integer& v) : value_(v) {}

    /// Throws std::domain_error on a zero denominator.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "a", "-a" or "a/b" in decimal.
    static Rational parse(std::string_view text);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "a" for integers, "a/b" otherwise.
    std::string str() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_), raw_tag{}); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

    /// Exact integer power; negative exponents invert (zero base throws).
    Rational pow(long exponent) const;

    const mpq_class& raw() const { return value_; }

private:
    struct raw_tag {};
    Rational(mpq_class v, raw_tag) : value_(std::move(v)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Integer factorial(unsigned n);
Integer binomial(long n, long k);
Integer ipow(const Integer& base, unsigned long exponent);

} // namespace qtrace
