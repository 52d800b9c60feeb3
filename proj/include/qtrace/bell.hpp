#pragma once

// Complete Bell polynomials, Faa di Bruno's formula and the arcsin-modified
// Bell generating function Lambda_k. Every evaluation happens in a coefficient
// ring; nothing is kept symbolic.

#include <span>
#include <stdexcept>
#include <vector>

#include "qtrace/partitions.hpp"
#include "qtrace/rational.hpp"
#include "qtrace/series.hpp"

namespace qtrace::bell {

/// d_1..d_k, the j-th entry standing for a j-th derivative value.
template <class R>
using DerivativeList = std::vector<R>;

/// B_k(x_1..x_k) as the partition trace with weight phi_B.
template <CoefficientRing R>
R bell_via_trace(unsigned k, std::span<const R> x)
{
    if (k == 0 || x.size() != k)
        throw std::invalid_argument("bell_via_trace: need exactly k >= 1 values");
    return partitions::trace<R>(k, partitions::weight_function("phi_B"), x);
}

/// B_k(x_1..x_k) = k! [t^k] prod_{j<=k} exp(x_j t^j / j!), expanded with Series<R> in t.
template <CoefficientRing R>
R bell_via_genfun(unsigned k, std::span<const R> x)
{
    if (k == 0 || x.size() != k)
        throw std::invalid_argument("bell_via_genfun: need exactly k >= 1 values");
    const R zero = ring_traits<R>::zero(x[0]);
    Series<R> product = Series<R>::constant(k, ring_traits<R>::one(x[0]));
    for (unsigned j = 1; j <= k; ++j) {
        auto term = Series<R>::monomial(k, j, x[j - 1] * Rational(Integer(1), factorial(j)));
        if (term[j] == zero)
            continue;
        product = product * exp(term);
    }
    return product[k] * Rational(factorial(k));
}

template <CoefficientRing R>
R bell_via_trace(unsigned k, const std::vector<R>& x)
{
    return bell_via_trace<R>(k, std::span<const R>(x));
}

template <CoefficientRing R>
R bell_via_genfun(unsigned k, const std::vector<R>& x)
{
    return bell_via_genfun<R>(k, std::span<const R>(x));
}

/// k-th derivative of f(g(x)) at x0 from f^{(1..)}(g(x0)) and g^{(1..k)}(x0):
/// sum_{lambda |- k} k! f^{(l(lambda))} prod (g^{(j)})^{m_j} / (m_j! (j!)^{m_j}).
template <CoefficientRing R>
R faa_di_bruno(unsigned k, std::span<const R> f_derivs, std::span<const R> g_derivs)
{
    if (k == 0 || g_derivs.size() != k || f_derivs.size() < k)
        throw std::invalid_argument("faa_di_bruno: need k g-derivatives and at least k f-derivatives");
    R acc = ring_traits<R>::zero(g_derivs[0]);
    partitions::for_each_partition(k, [&](const partitions::Partition& lambda) {
        acc = acc + f_derivs[lambda.length() - 1] * partitions::monomial<R>(lambda, g_derivs) *
                        partitions::phi_bell(lambda);
    });
    return acc;
}

template <CoefficientRing R>
R faa_di_bruno(unsigned k, const DerivativeList<R>& f_derivs, const DerivativeList<R>& g_derivs)
{
    return faa_di_bruno<R>(k, std::span<const R>(f_derivs), std::span<const R>(g_derivs));
}

/// arcsin(u) = sum_n C(2n,n) u^{2n+1} / (4^n (2n+1)), truncated at the given order.
inline QSeries arcsin_series(std::size_t order)
{
    std::vector<Rational> c(order + 1);
    for (std::size_t n = 0; 2 * n + 1 <= order; ++n)
        c[2 * n + 1] = Rational(binomial(static_cast<long>(2 * n), static_cast<long>(n)),
                                ipow(4, n) * Integer(static_cast<unsigned long>(2 * n + 1)));
    return QSeries(std::move(c));
}

/// Lambda_k(x_1..x_k) = [t^{2k}] prod_{j<=k} exp( 2(-1)^{j-1}/(2j)! (2 arcsin(t/2))^{2j} x_j ).
/// k = 0 gives one.
template <CoefficientRing R>
R lambda_poly(unsigned k, std::span<const R> x, const R& one)
{
    if (x.size() != k)
        throw std::invalid_argument("lambda_poly: need exactly k values");
    if (k == 0)
        return one;
    const std::size_t order = 2 * k;
    // s = 2 arcsin(t/2): substitute u = t/2 coefficient-wise.
    QSeries asin = arcsin_series(order);
    std::vector<Rational> sc(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        sc[n] = asin[n] * Rational(Integer(2), ipow(2, n));
    QSeries s2 = QSeries(std::move(sc));
    s2 = s2 * s2;

    Series<R> product = Series<R>::constant(order, one);
    QSeries s2_power = QSeries::constant(order, Rational(1));
    for (unsigned j = 1; j <= k; ++j) {
        s2_power = s2_power * s2;
        Rational c(Integer(j % 2 ? 2 : -2), factorial(2 * j));
        product = product * exp(lift<R>(s2_power * c, x[j - 1]));
    }
    return product[order];
}

template <CoefficientRing R>
R lambda_poly(unsigned k, const std::vector<R>& x, const R& one)
{
    return lambda_poly<R>(k, std::span<const R>(x), one);
}

inline Rational lambda_poly(unsigned k, const std::vector<Rational>& x)
{
    return lambda_poly<Rational>(k, std::span<const Rational>(x), Rational(1));
}

} // namespace qtrace::bell
