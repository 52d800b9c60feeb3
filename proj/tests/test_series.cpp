#include "doctest.h"

#include "qtrace/arith.hpp"
#include "qtrace/series.hpp"
#include "support.hpp"

using namespace qtrace;
using qtrace::testing::Gen;

namespace {

QSeries q_series(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return QSeries(v);
}

QSeries geometric(std::size_t order)
{
    return from_coefficient_function(order, [](std::size_t) { return Rational(1); });
}

// Term-by-term oracle for the product: no valuation shortcuts.
QSeries naive_product(const QSeries& a, const QSeries& b)
{
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t n = 0; n <= a.order(); ++n)
        for (std::size_t i = 0; i <= n; ++i)
            c[n] += a[i] * b[n - i];
    return QSeries(c);
}

} // namespace

TEST_SUITE("series")
{
    TEST_CASE("multiplication examples")
    {
        CHECK(q_series({1, 1, 0}) * q_series({1, -1, 0}) == q_series({1, 0, -1}));
        CHECK(geometric(10) * QSeries::monomial(10, 0, 1) - geometric(10) * QSeries::monomial(10, 1, 1) ==
              QSeries::constant(10, 1));
    }

    TEST_CASE("division examples and errors")
    {
        CHECK(QSeries::constant(4, 1) / q_series({1, -1, 0, 0, 0}) == q_series({1, 1, 1, 1, 1}));
        Gen g(11);
        for (int i = 0; i < 20; ++i) {
            auto a = g.series_with_constant(12, g.nonzero_rational());
            CHECK(a / a == QSeries::constant(12, 1));
        }
        CHECK_THROWS_WITH_AS(QSeries::constant(3, 1) / q_series({0, 1, 0, 0}), "division by non-unit series",
                             std::domain_error);
    }

    TEST_CASE("order mismatch is an error, never a silent truncation")
    {
        CHECK_THROWS_AS(q_series({1, 1}) + q_series({1, 1, 1}), OrderMismatch);
        CHECK_THROWS_AS(q_series({1, 1}) * q_series({1, 1, 1}), OrderMismatch);
        CHECK_THROWS_AS(q_series({1, 1}) / q_series({1, 1, 1}), OrderMismatch);
    }

    TEST_CASE("exp and log examples")
    {
        CHECK(exp(QSeries(5, Rational())) == QSeries::constant(5, 1));
        CHECK(exp(QSeries::monomial(3, 1, 1)) ==
              QSeries({Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)}));
        CHECK(exp(log(q_series({1, 1}).truncate(20))) == q_series({1, 1}).truncate(20));
        CHECK(log(QSeries::constant(4, 1)) == QSeries(4, Rational()));
        CHECK(log(QSeries::constant(4, 1) / q_series({1, -1, 0, 0, 0})) ==
              QSeries({Rational(0), Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 4)}));
        CHECK_THROWS(exp(q_series({1, 1})));
        CHECK_THROWS(log(q_series({2, 1})));
    }

    TEST_CASE("theta and coefficient-function examples")
    {
        CHECK(theta_op(QSeries::constant(6, 7)) == QSeries(6, Rational()));
        auto n_series = from_coefficient_function(5, [](std::size_t n) { return Rational(static_cast<long>(n)); });
        CHECK(theta_op(geometric(5)) == n_series);
        CHECK(from_coefficient_function(6, [](std::size_t n) { return Rational(n == 0 ? 1 : 0); }) ==
              QSeries::constant(6, 1));
        auto sigma1 = from_coefficient_function(3, [](std::size_t n) {
            return n == 0 ? Rational() : Rational(arith::sigma(1, n));
        });
        CHECK(sigma1 == q_series({0, 1, 3, 4}));
    }

    TEST_CASE("product of factors examples")
    {
        auto euler = product_of_factors(8, [](std::size_t m) { return QSeries::constant(8, 1) - QSeries::monomial(8, m, 1); });
        CHECK(euler == q_series({1, -1, -1, 0, 0, 1, 0, 1, 0}));
        auto distinct = product_of_factors(5, [](std::size_t m) { return QSeries::constant(5, 1) + QSeries::monomial(5, m, 1); });
        CHECK(distinct == q_series({1, 1, 1, 2, 2, 3}));
        CHECK_THROWS(product_of_factors(5, [](std::size_t m) { return QSeries::constant(5, 1) + QSeries::monomial(5, m - 1, 1); }));
    }

    TEST_CASE("ring axioms on 240 random triples")
    {
        Gen g(20240501);
        for (int i = 0; i < 240; ++i) {
            auto N = static_cast<std::size_t>(g.integer(0, 32));
            auto a = g.series(N), b = g.series(N), c = g.series(N);
            const QSeries zero(N, Rational()), one = QSeries::constant(N, 1);
            CAPTURE(N);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + zero == a);
            CHECK(a - a == zero);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * one == a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == naive_product(a, b));
        }
    }

    TEST_CASE("division inverts multiplication on 200 random pairs")
    {
        Gen g(7);
        for (int i = 0; i < 200; ++i) {
            auto N = static_cast<std::size_t>(g.integer(0, 32));
            auto a = g.series(N);
            auto b = g.series_with_constant(N, g.nonzero_rational());
            CHECK((a * b) / b == a);
        }
    }

    TEST_CASE("exp and log are mutually inverse on 200 random inputs")
    {
        Gen g(99);
        for (int i = 0; i < 200; ++i) {
            auto N = static_cast<std::size_t>(g.integer(1, 64));
            auto a = g.series_with_constant(N, Rational(), 3, 3);
            auto b = g.series_with_constant(N, Rational(1), 3, 3);
            CAPTURE(N);
            CHECK(log(exp(a)) == a);
            CHECK(exp(log(b)) == b);
            // exp turns sums into products
            auto c = g.series_with_constant(N, Rational(), 3, 3);
            CHECK(exp(a + c) == exp(a) * exp(c));
        }
    }

    TEST_CASE("theta obeys the Leibniz rule on 200 random pairs")
    {
        Gen g(5);
        for (int i = 0; i < 200; ++i) {
            auto N = static_cast<std::size_t>(g.integer(0, 32));
            auto a = g.series(N), b = g.series(N);
            CHECK(theta_op(a * b) == theta_op(a) * b + a * theta_op(b));
        }
    }

    TEST_CASE("compose, substitute_power and power")
    {
        Gen g(3);
        for (int i = 0; i < 50; ++i) {
            auto N = static_cast<std::size_t>(g.integer(1, 20));
            auto a = g.series_with_constant(N, Rational(), 3, 3);
            // exp(a) = compose(exp(x), a)
            CHECK(compose(exp(QSeries::monomial(N, 1, 1)), a) == exp(a));
            auto b = g.series(N);
            CHECK(power(b, 3) == b * b * b);
            CHECK(power(b, 0) == QSeries::constant(N, 1));
        }
        CHECK(substitute_power(q_series({1, 2, 3, 4, 5, 6, 7}), 3) == q_series({1, 0, 0, 2, 0, 0, 3}));
    }

    TEST_CASE("nested coefficient ring Series<Series<Rational>>")
    {
        Gen g(123);
        for (int i = 0; i < 200; ++i) {
            auto outer = static_cast<std::size_t>(g.integer(0, 6));
            auto inner = static_cast<std::size_t>(g.integer(0, 4));
            auto a = g.nested(outer, inner), b = g.nested(outer, inner), c = g.nested(outer, inner);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(theta_op(a * b) == theta_op(a) * b + a * theta_op(b));
        }
        for (int i = 0; i < 40; ++i) {
            auto a = g.nested(5, 3);
            const QSeries inner_zero(3, Rational());
            auto a0 = a.with_coefficient(0, inner_zero);
            CHECK(log(exp(a0)) == a0);
            // invertible constant: inner series with unit constant term
            auto b = a.with_coefficient(0, g.series_with_constant(3, g.nonzero_rational()));
            CHECK((a * b) / b == a);
        }
    }
}
