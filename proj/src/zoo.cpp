#include "qtrace/zoo.hpp"

#include <stdexcept>
#include <vector>

#include "qtrace/arith.hpp"

namespace qtrace::zoo {

namespace {

void require_positive(unsigned v, const char* what)
{
    if (v == 0)
        throw std::invalid_argument(std::string(what) + " must be positive");
}

Integer pow_u(std::uint64_t base, unsigned e)
{
    return ipow(Integer(static_cast<unsigned long>(base)), e);
}

// sum over n in the given range of sign * weight * q^{exponent}
template <class Exponent, class Coefficient>
QSeries lacunary(std::size_t order, long n_min, long n_max, Exponent exponent, Coefficient coefficient)
{
    std::vector<Rational> c(order + 1);
    for (long n = n_min; n <= n_max; ++n) {
        long e = exponent(n);
        if (e < 0 || static_cast<std::size_t>(e) > order)
            continue;
        c[static_cast<std::size_t>(e)] += coefficient(n);
    }
    return QSeries(std::move(c));
}

long pentagonal_range(std::size_t order)
{
    long m = 0;
    while (static_cast<std::size_t>(m * (3 * m - 1) / 2) <= order)
        ++m;
    return m;
}

} // namespace

QSeries eisenstein(unsigned k, std::size_t order)
{
    require_positive(k, "eisenstein: k");
    const Rational scale = -Rational(4 * static_cast<long>(k)) / arith::bernoulli(2 * k);
    return from_coefficient_function(order, [&](std::size_t n) {
        return n == 0 ? Rational(1) : scale * Rational(arith::sigma(2 * k - 1, n));
    });
}

QSeries L_series(unsigned l, std::size_t order)
{
    require_positive(l, "L_series: l");
    return from_coefficient_function(order, [&](std::size_t n) {
        return n == 0 ? Rational() : Rational(arith::sigma(l - 1, n));
    });
}

QSeries F_series(unsigned j, std::size_t order)
{
    require_positive(j, "F_series: j");
    if (j == 1)
        return eisenstein(1, order) * Rational(1, 24);
    return from_coefficient_function(order, [&](std::size_t n) {
        return n == 0 ? Rational() : -Rational(pow_u(n, j - 1) * arith::sigma(1, n));
    });
}

QSeries G_series(unsigned j, std::size_t order)
{
    require_positive(j, "G_series: j");
    return from_coefficient_function(order, [&](std::size_t n) -> Rational {
        if (n == 0)
            return j == 1 ? Rational(1, 6) : Rational();
        Integer acc = 0;
        for (auto d : arith::divisors(n)) {
            if (j == 1)
                acc += arith::to_int(arith::chi_minus3(d));
            else if (j % 2 == 0) {
                if ((n / d) % 3 != 0)
                    acc += pow_u(d, j - 1);
            } else
                acc += arith::to_int(arith::chi_minus3(n / d)) * pow_u(d, j - 1);
        }
        return j % 2 == 0 ? -Rational(acc) : Rational(acc);
    });
}

QSeries H_series(unsigned j, std::size_t order)
{
    require_positive(j, "H_series: j");
    const auto t = arith::central_factorial_row(j);
    QSeries acc(order, Rational());
    for (unsigned l = 1; l <= 2 * j; ++l)
        if (t[l - 1] != 0)
            acc += L_series(l, order) * Rational(t[l - 1]);
    const Rational scale(Integer(j % 2 ? 1 : -1) * factorial(j - 1), factorial(2 * j - 1));
    return acc * scale;
}

QSeries H_ktr_series(unsigned j, unsigned t, unsigned r, const Rational& a, std::size_t order)
{
    require_positive(j, "H_ktr_series: j");
    require_positive(t, "H_ktr_series: t");
    require_positive(r, "H_ktr_series: r");
    QSeries acc(order, Rational());
    for (std::size_t m = 1; static_cast<std::size_t>(r) * j * m <= order; ++m) {
        QSeries base = QSeries::constant(order, Rational(1)) + QSeries::monomial(order, m, a) +
                       QSeries::monomial(order, 2 * m, Rational(1));
        acc += divide(QSeries::monomial(order, static_cast<std::size_t>(r) * j * m, Rational(1)),
                      power(base, t * j));
    }
    return acc * Rational(Integer(j % 2 ? 1 : -1) * factorial(j - 1));
}

QSeries g_series(unsigned k, std::size_t order)
{
    require_positive(k, "g_series: k");
    return from_coefficient_function(order, [&](std::size_t n) -> Rational {
        if (n == 0)
            return Rational();
        Integer acc = 0;
        for (auto d : arith::divisors(n)) {
            Integer term = pow_u(d, 2 * k - 1);
            acc += d % 2 ? term : Integer(-term);
        }
        return Rational(acc, pow_u(n, k));
    });
}

QSeries pentagonal_theta(std::size_t order)
{
    const long m = pentagonal_range(order);
    return lacunary(order, -m, m, [](long n) { return n * (3 * n + 1) / 2; },
                    [](long n) { return Rational(n % 2 ? -1 : 1); });
}

QSeries V_numerator(unsigned k, std::size_t order)
{
    const long m = pentagonal_range(order);
    return lacunary(order, -m, m, [](long n) { return n * (3 * n + 1) / 2; }, [k](long n) {
        Rational v(ipow(Integer(6 * n + 1), k));
        return n % 2 ? -v : v;
    });
}

QSeries U_numerator(unsigned k, std::size_t order)
{
    long m = 0;
    while (static_cast<std::size_t>(m * (m + 1) / 2) <= order)
        ++m;
    return lacunary(order, 0, m, [](long n) { return n * (n + 1) / 2; }, [k](long n) {
        Rational v(ipow(Integer(2 * n + 1), 2 * k + 1));
        return n % 2 ? -v : v;
    });
}

QSeries U_denominator(std::size_t order)
{
    return U_numerator(0, order);
}

QSeries twisted_divisor_series(unsigned l, std::size_t order)
{
    return from_coefficient_function(order, [&](std::size_t n) -> Rational {
        if (n == 0)
            return Rational();
        Integer acc = 0;
        for (auto d : arith::divisors(n))
            acc += arith::to_int(arith::chi_minus3(d)) * pow_u(d, l);
        return Rational(acc);
    });
}

IntPolynomial cyclotomic(unsigned n)
{
    require_positive(n, "cyclotomic: n");
    IntPolynomial num(std::vector<Integer>{1});
    std::vector<unsigned> den_factors;
    for (auto d : arith::divisors(n)) {
        int mu = arith::mobius(n / d);
        if (mu == 1)
            num = num * IntPolynomial::x_power_minus_one(static_cast<unsigned>(d));
        else if (mu == -1)
            den_factors.push_back(static_cast<unsigned>(d));
    }
    for (auto d : den_factors)
        num = num.exact_divide(IntPolynomial::x_power_minus_one(d));
    return num;
}

Rational varsigma(unsigned k, unsigned n)
{
    if (k < 1)
        throw std::invalid_argument("varsigma: k must be positive");
    if (n < 2)
        throw std::invalid_argument("varsigma: n must be at least 2");
    Rational acc;
    for (unsigned m = 1; m <= k; ++m)
        acc += arith::bernoulli(m) / Rational(m) * Rational(arith::stirling_first(k, m)) *
               Rational(arith::jordan_totient(m, n));
    return -acc / Rational(factorial(k - 1));
}

} // namespace qtrace::zoo
