#include "doctest.h"

#include "qtrace/bell.hpp"
#include "support.hpp"

using namespace qtrace;
using namespace qtrace::bell;
using qtrace::testing::Gen;

namespace {

// Bell numbers from B_{n+1} = sum_k C(n,k) B_k.
std::vector<Integer> bell_numbers(unsigned max_n)
{
    std::vector<Integer> b{1};
    for (unsigned n = 0; n < max_n; ++n) {
        Integer s = 0;
        for (unsigned k = 0; k <= n; ++k)
            s += binomial(n, k) * b[k];
        b.push_back(s);
    }
    return b;
}

QSeries sin_series(std::size_t order)
{
    std::vector<Rational> c(order + 1);
    for (std::size_t n = 1; n <= order; n += 2)
        c[n] = Rational(Integer((n / 2) % 2 ? -1 : 1), factorial(static_cast<unsigned>(n)));
    return QSeries(c);
}

} // namespace

TEST_SUITE("bell")
{
    TEST_CASE("first four Bell polynomials at random points")
    {
        Gen g(2718);
        for (int i = 0; i < 25; ++i) {
            auto x = g.rationals(4);
            const Rational x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
            std::vector<Rational> e{x1, x2 + x1 * x1, x3 + Rational(3) * x2 * x1 + x1 * x1 * x1,
                                    x4 + Rational(4) * x3 * x1 + Rational(3) * x2 * x2 +
                                        Rational(6) * x2 * x1 * x1 + x1 * x1 * x1 * x1};
            for (unsigned k = 1; k <= 4; ++k) {
                std::vector<Rational> xs(x.begin(), x.begin() + k);
                CHECK(bell_via_trace(k, xs) == e[k - 1]);
                CHECK(bell_via_genfun(k, xs) == e[k - 1]);
            }
        }
    }

    TEST_CASE("small cases")
    {
        CHECK(bell_via_genfun(3, std::vector<Rational>{1, 0, 0}) == Rational(1));
        CHECK(bell_via_trace(4, std::vector<Rational>(4, Rational(1))) == Rational(15));
        CHECK_THROWS(bell_via_trace(3, std::vector<Rational>{1, 2}));
    }

    TEST_CASE("trace and generating-function evaluations agree on 120 random inputs")
    {
        Gen g(31415);
        for (int i = 0; i < 120; ++i) {
            auto k = static_cast<unsigned>(g.integer(1, 8));
            auto x = g.rationals(k);
            CAPTURE(k);
            CHECK(bell_via_trace(k, x) == bell_via_genfun(k, x));
        }
    }

    TEST_CASE("trace and generating-function evaluations agree over series coefficients")
    {
        Gen g(8);
        for (int i = 0; i < 10; ++i) {
            auto k = static_cast<unsigned>(g.integer(1, 6));
            std::vector<QSeries> x;
            for (unsigned j = 0; j < k; ++j)
                x.push_back(g.series(6, 4, 3));
            CHECK(bell_via_trace(k, x) == bell_via_genfun(k, x));
        }
    }

    TEST_CASE("all-ones evaluation gives the Bell numbers through 10")
    {
        auto b = bell_numbers(10);
        for (unsigned k = 1; k <= 10; ++k) {
            std::vector<Rational> ones(k, Rational(1));
            CHECK(bell_via_trace(k, ones) == Rational(b[k]));
            CHECK(bell_via_genfun(k, ones) == Rational(b[k]));
        }
    }

    TEST_CASE("homogeneity B_k(c x_1, c^2 x_2, ...) = c^k B_k(x) on 200 cases")
    {
        Gen g(1618);
        for (int i = 0; i < 200; ++i) {
            auto k = static_cast<unsigned>(g.integer(1, 7));
            auto x = g.rationals(k, 9, 4);
            auto c = g.nonzero_rational(5, 3);
            std::vector<Rational> scaled;
            for (unsigned j = 1; j <= k; ++j)
                scaled.push_back(x[j - 1] * c.pow(j));
            CHECK(bell_via_trace(k, scaled) == c.pow(k) * bell_via_trace(k, x));
        }
    }

    TEST_CASE("Faa di Bruno identities")
    {
        Gen g(77);
        auto f = g.rationals(5), gd = g.rationals(5);
        // k = 1: chain rule
        CHECK(faa_di_bruno(1, f, std::vector<Rational>{gd[0]}) == f[0] * gd[0]);
        // k = 2: f'' g'^2 + f' g''
        CHECK(faa_di_bruno(2, f, std::vector<Rational>{gd[0], gd[1]}) == f[1] * gd[0] * gd[0] + f[0] * gd[1]);
        // f = exp: every f-derivative is 1, so the result is the Bell polynomial
        std::vector<Rational> ones(5, Rational(1));
        CHECK(faa_di_bruno(5, ones, gd) == bell_via_genfun(5, gd));
        // g = identity: only the partition (1^k) survives
        std::vector<Rational> id{1, 0, 0, 0, 0};
        CHECK(faa_di_bruno(5, f, id) == f[4]);
    }

    TEST_CASE("Faa di Bruno agrees with series composition")
    {
        Gen g(1001);
        for (int i = 0; i < 60; ++i) {
            auto k = static_cast<unsigned>(g.integer(1, 8));
            auto fd = g.rationals(k, 6, 3), gd = g.rationals(k, 6, 3);
            // f(y) = sum_{j>=1} fd_j y^j / j!, g(x) = sum gd_j x^j / j!
            std::vector<Rational> fc(k + 1), gc(k + 1);
            for (unsigned j = 1; j <= k; ++j) {
                fc[j] = fd[j - 1] / Rational(factorial(j));
                gc[j] = gd[j - 1] / Rational(factorial(j));
            }
            auto composed = compose(QSeries(fc), QSeries(gc));
            CHECK(faa_di_bruno(k, fd, gd) == composed[k] * Rational(factorial(k)));
        }
    }

    TEST_CASE("arcsin inverts sin")
    {
        for (std::size_t N : {1, 2, 9, 25}) {
            CHECK(compose(sin_series(N), arcsin_series(N)) == QSeries::monomial(N, 1, 1));
            CHECK(compose(arcsin_series(N), sin_series(N)) == QSeries::monomial(N, 1, 1));
        }
    }

    TEST_CASE("Lambda_k base cases")
    {
        Gen g(6);
        for (int i = 0; i < 10; ++i) {
            auto x = g.rational();
            CHECK(lambda_poly(1, std::vector<Rational>{x}) == x);
        }
        CHECK(lambda_poly(0, std::vector<Rational>{}) == Rational(1));
        for (unsigned k = 1; k <= 6; ++k)
            CHECK(lambda_poly(k, std::vector<Rational>(k)) == Rational(0));
    }
}
