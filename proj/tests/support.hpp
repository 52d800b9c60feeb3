#pragma once

// Hand-rolled generators for the property tests. Fixed seeds keep every run
// reproducible; each suite gets its own stream.

#include <cstdint>
#include <random>
#include <vector>

#include "qtrace/rational.hpp"
#include "qtrace/series.hpp"

namespace qtrace::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long bound = 20, long max_den = 9)
    {
        return Rational(Integer(integer(-bound, bound)), Integer(integer(1, max_den)));
    }

    Rational nonzero_rational(long bound = 20, long max_den = 9)
    {
        for (;;) {
            Rational r = rational(bound, max_den);
            if (!r.is_zero())
                return r;
        }
    }

    QSeries series(std::size_t order, long bound = 9, long max_den = 5)
    {
        std::vector<Rational> c;
        for (std::size_t n = 0; n <= order; ++n)
            c.push_back(rational(bound, max_den));
        return QSeries(std::move(c));
    }

    /// Constant term fixed to `c0`.
    QSeries series_with_constant(std::size_t order, const Rational& c0, long bound = 9, long max_den = 5)
    {
        return series(order, bound, max_den).with_coefficient(0, c0);
    }

    /// Series over Series<Rational>: outer order, inner order.
    Series<QSeries> nested(std::size_t outer, std::size_t inner)
    {
        std::vector<QSeries> c;
        for (std::size_t n = 0; n <= outer; ++n)
            c.push_back(series(inner, 4, 3));
        return Series<QSeries>(std::move(c));
    }

    std::vector<Rational> rationals(std::size_t count, long bound = 20, long max_den = 9)
    {
        std::vector<Rational> out;
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(rational(bound, max_den));
        return out;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace qtrace::testing
