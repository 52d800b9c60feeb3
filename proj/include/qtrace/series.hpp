#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtrace/rational.hpp"

namespace qtrace {

/// Thrown when two series of different truncation orders meet in a binary op.
struct OrderMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Ring operations that need a prototype element (a nested series carries its
/// own inner order, so "zero" is only meaningful relative to an existing value).
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero(const Rational&) { return Rational(); }
    static Rational one(const Rational&) { return Rational(1); }
    static bool is_unit(const Rational& x) { return !x.is_zero(); }
    static Rational inverse(const Rational& x) { return Rational(1) / x; }
};

/// Commutative ring with an action of the rationals.
template <class R>
concept CoefficientRing = std::copyable<R> && std::equality_comparable<R> && requires(const R a, const R b, const Rational c) {
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a * c } -> std::same_as<R>;
    { ring_traits<R>::zero(a) } -> std::same_as<R>;
    { ring_traits<R>::one(a) } -> std::same_as<R>;
    { ring_traits<R>::is_unit(a) } -> std::convertible_to<bool>;
    { ring_traits<R>::inverse(a) } -> std::same_as<R>;
};

/// Truncated power series sum_{n=0}^{N} c_n x^n. The order N is inclusive and
/// part of the value: binary operations require equal orders.
template <class R>
class Series {
public:
    using coefficient_type = R;

    /// Zero series of the given order; `zero` fixes the coefficient prototype.
    Series(std::size_t order, R zero) : coeffs_(order + 1, std::move(zero)) {}

    explicit Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw std::invalid_argument("series needs at least one coefficient");
    }

    Series() requires std::same_as<R, Rational> : coeffs_(1) {}

    static Series constant(std::size_t order, const R& c)
    {
        Series s(order, ring_traits<R>::zero(c));
        s.coeffs_[0] = c;
        return s;
    }

    static Series monomial(std::size_t order, std::size_t degree, const R& c)
    {
        Series s(order, ring_traits<R>::zero(c));
        if (degree <= order)
            s.coeffs_[degree] = c;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const R& operator[](std::size_t n) const { return coeffs_.at(n); }
    std::span<const R> coeffs() const { return coeffs_; }

    const R& zero_element() const { return coeffs_[0]; }

    /// Smallest n with a nonzero coefficient, or order()+1 for the zero series.
    std::size_t valuation() const
    {
        const R z = ring_traits<R>::zero(coeffs_[0]);
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            if (!(coeffs_[n] == z))
                return n;
        return coeffs_.size();
    }

    /// Drop (or zero-pad) to a new order. This is the only way orders change.
    Series truncate(std::size_t new_order) const
    {
        std::vector<R> c(new_order + 1, ring_traits<R>::zero(coeffs_[0]));
        for (std::size_t n = 0; n <= std::min(new_order, order()); ++n)
            c[n] = coeffs_[n];
        return Series(std::move(c));
    }

    /// Copy with one coefficient replaced; the original is untouched.
    Series with_coefficient(std::size_t n, R value) const
    {
        Series s = *this;
        s.coeffs_.at(n) = std::move(value);
        return s;
    }

    friend bool operator==(const Series&, const Series&) = default;

    friend Series operator+(const Series& a, const Series& b)
    {
        check_orders(a, b);
        Series r = a;
        for (std::size_t n = 0; n < r.coeffs_.size(); ++n)
            r.coeffs_[n] = r.coeffs_[n] + b.coeffs_[n];
        return r;
    }

    friend Series operator-(const Series& a, const Series& b)
    {
        check_orders(a, b);
        Series r = a;
        for (std::size_t n = 0; n < r.coeffs_.size(); ++n)
            r.coeffs_[n] = r.coeffs_[n] - b.coeffs_[n];
        return r;
    }

    friend Series operator-(const Series& a)
    {
        Series r = a;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    /// Cauchy product truncated at the common order.
    friend Series operator*(const Series& a, const Series& b)
    {
        check_orders(a, b);
        const std::size_t N = a.order();
        const R z = ring_traits<R>::zero(a.coeffs_[0]);
        std::size_t va = a.valuation(), vb = b.valuation();
        Series r(N, z);
        for (std::size_t i = va; i <= N; ++i) {
            if (a.coeffs_[i] == z)
                continue;
            for (std::size_t j = vb; i + j <= N; ++j) {
                if (b.coeffs_[j] == z)
                    continue;
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    friend Series operator*(const Series& a, const Rational& c)
    {
        Series r = a;
        for (auto& x : r.coeffs_)
            x = x * c;
        return r;
    }

    friend Series operator*(const Rational& c, const Series& a) { return a * c; }

    Series& operator+=(const Series& b) { return *this = *this + b; }
    Series& operator-=(const Series& b) { return *this = *this - b; }
    Series& operator*=(const Series& b) { return *this = *this * b; }

    /// Multiply a single coefficient ring element into every coefficient.
    Series scale(const R& c) const
    {
        Series r = *this;
        for (auto& x : r.coeffs_)
            x = x * c;
        return r;
    }

private:
    static void check_orders(const Series& a, const Series& b)
    {
        if (a.order() != b.order())
            throw OrderMismatch("series order mismatch: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
    }

    std::vector<R> coeffs_;
};

template <class R>
struct ring_traits<Series<R>> {
    static Series<R> zero(const Series<R>& like) { return Series<R>(like.order(), ring_traits<R>::zero(like[0])); }
    static Series<R> one(const Series<R>& like)
    {
        return Series<R>::constant(like.order(), ring_traits<R>::one(like[0]));
    }
    static bool is_unit(const Series<R>& x) { return ring_traits<R>::is_unit(x[0]); }
    static Series<R> inverse(const Series<R>& x);
};

using QSeries = Series<Rational>;

/// c with c * b = a through the common order.
template <class R>
Series<R> divide(const Series<R>& a, const Series<R>& b)
{
    if (a.order() != b.order())
        throw OrderMismatch("series order mismatch in division");
    if (!ring_traits<R>::is_unit(b[0]))
        throw std::domain_error("division by non-unit series");
    const std::size_t N = a.order();
    const R inv = ring_traits<R>::inverse(b[0]);
    std::vector<R> c;
    c.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        R acc = a[n];
        for (std::size_t k = 1; k <= n; ++k)
            acc = acc - b[k] * c[n - k];
        c.push_back(acc * inv);
    }
    return Series<R>(std::move(c));
}

template <class R>
Series<R> operator/(const Series<R>& a, const Series<R>& b)
{
    return divide(a, b);
}

template <class R>
Series<R> ring_traits<Series<R>>::inverse(const Series<R>& x)
{
    return divide(one(x), x);
}

/// exp(a) for a with zero constant term, via n f_n = sum_{k=1}^{n} k a_k f_{n-k}.
template <CoefficientRing R>
Series<R> exp(const Series<R>& a)
{
    const R z = ring_traits<R>::zero(a[0]);
    if (!(a[0] == z))
        throw std::domain_error("exp of a series with nonzero constant term");
    const std::size_t N = a.order();
    std::vector<R> f;
    f.reserve(N + 1);
    f.push_back(ring_traits<R>::one(a[0]));
    for (std::size_t n = 1; n <= N; ++n) {
        R acc = z;
        for (std::size_t k = 1; k <= n; ++k)
            if (!(a[k] == z))
                acc = acc + a[k] * f[n - k] * Rational(static_cast<long>(k));
        f.push_back(acc * Rational(1, static_cast<long>(n)));
    }
    return Series<R>(std::move(f));
}

/// log(a) for a with constant term one, via n g_n = n a_n - sum_{k=1}^{n-1} k g_k a_{n-k}.
template <CoefficientRing R>
Series<R> log(const Series<R>& a)
{
    if (!(a[0] == ring_traits<R>::one(a[0])))
        throw std::domain_error("log of a series with constant term other than one");
    const std::size_t N = a.order();
    const R z = ring_traits<R>::zero(a[0]);
    std::vector<R> g(N + 1, z);
    for (std::size_t n = 1; n <= N; ++n) {
        R acc = a[n] * Rational(static_cast<long>(n));
        for (std::size_t k = 1; k < n; ++k)
            acc = acc - g[k] * a[n - k] * Rational(static_cast<long>(k));
        g[n] = acc * Rational(1, static_cast<long>(n));
    }
    return Series<R>(std::move(g));
}

/// theta = x d/dx: multiplies the n-th coefficient by n.
template <CoefficientRing R>
Series<R> theta_op(const Series<R>& a)
{
    std::vector<R> c(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t n = 0; n < c.size(); ++n)
        c[n] = c[n] * Rational(static_cast<long>(n));
    return Series<R>(std::move(c));
}

/// sum_{n=0}^{N} f(n) x^n
template <class R, class F>
    requires std::invocable<F&, std::size_t>
Series<R> from_coefficient_function(std::size_t order, F&& f)
{
    std::vector<R> c;
    c.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        c.push_back(static_cast<R>(f(n)));
    return Series<R>(std::move(c));
}

inline QSeries from_coefficient_function(std::size_t order, const std::function<Rational(std::size_t)>& f)
{
    return from_coefficient_function<Rational>(order, f);
}

/// Truncated infinite product prod_{m>=1} factor(m). The m-th factor must equal
/// 1 + O(x^m), so only m <= order contributes; a violation throws.
template <class R, class F>
    requires std::invocable<F&, std::size_t>
Series<R> product_of_factors(std::size_t order, const R& zero, F&& factor)
{
    Series<R> acc = Series<R>::constant(order, ring_traits<R>::one(zero));
    for (std::size_t m = 1; m <= order; ++m) {
        Series<R> f = factor(m);
        if (f.order() != order)
            throw OrderMismatch("product_of_factors: factor has wrong order");
        if (!(f[0] == ring_traits<R>::one(zero)))
            throw std::domain_error("product_of_factors: factor " + std::to_string(m) + " is not 1 + O(x^m)");
        for (std::size_t n = 1; n < m; ++n)
            if (!(f[n] == ring_traits<R>::zero(zero)))
                throw std::domain_error("product_of_factors: factor " + std::to_string(m) +
                                        " is not 1 + O(x^m)");
        acc = acc * f;
    }
    return acc;
}

inline QSeries product_of_factors(std::size_t order, const std::function<QSeries(std::size_t)>& factor)
{
    return product_of_factors<Rational>(order, Rational(), factor);
}

/// f(g) with f treated as the polynomial given by its coefficients. Exact as a
/// composition of polynomials when g(0) != 0; for g(0) = 0 it is also the
/// truncated composition of power series.
template <CoefficientRing R>
Series<R> compose(const Series<R>& f, const Series<R>& g)
{
    if (f.order() != g.order())
        throw OrderMismatch("series order mismatch in compose");
    Series<R> acc = Series<R>::constant(g.order(), f[f.order()]);
    for (std::size_t i = f.order(); i-- > 0;)
        acc = acc * g + Series<R>::constant(g.order(), f[i]);
    return acc;
}

/// a(x^k), truncated to the same order.
template <class R>
Series<R> substitute_power(const Series<R>& a, std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("substitute_power: k must be positive");
    Series<R> r(a.order(), ring_traits<R>::zero(a[0]));
    std::vector<R> c(r.coeffs().begin(), r.coeffs().end());
    for (std::size_t n = 0; n * k <= a.order(); ++n)
        c[n * k] = a[n];
    return Series<R>(std::move(c));
}

/// a^e by repeated squaring (e = 0 gives one).
template <CoefficientRing R>
Series<R> power(const Series<R>& a, unsigned e)
{
    Series<R> result = ring_traits<Series<R>>::one(a);
    Series<R> base = a;
    while (e) {
        if (e & 1U)
            result = result * base;
        e >>= 1U;
        if (e)
            base = base * base;
    }
    return result;
}

/// Lift a rational series into Series<R> through the rational action on `one`.
template <CoefficientRing R>
Series<R> lift(const QSeries& s, const R& one)
{
    std::vector<R> c;
    c.reserve(s.order() + 1);
    for (const auto& x : s.coeffs())
        c.push_back(one * x);
    return Series<R>(std::move(c));
}

} // namespace qtrace
