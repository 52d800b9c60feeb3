#include "doctest.h"

#include <string>

#include "qtrace/arith.hpp"
#include "qtrace/oracles.hpp"
#include "qtrace/registry.hpp"
#include "qtrace/zoo.hpp"

using namespace qtrace;
using namespace qtrace::zoo;

namespace {

QSeries q_series(std::vector<Rational> c) { return QSeries(std::move(c)); }

QSeries one(std::size_t N) { return QSeries::constant(N, 1); }
QSeries q_pow(std::size_t N, std::size_t e) { return QSeries::monomial(N, e, 1); }

// Test-side definition of H_{j,t,r}(a;q) by explicit division of each summand.
QSeries H_ktr_by_division(unsigned j, unsigned t, unsigned r, const Rational& a, std::size_t N)
{
    QSeries acc(N, Rational());
    for (std::size_t m = 1; r * j * m <= N; ++m) {
        QSeries den = one(N) + q_pow(N, m) * a + q_pow(N, 2 * m);
        acc += q_pow(N, r * j * m) / power(den, t * j);
    }
    Rational c = Rational(factorial(j - 1)) * Rational(j % 2 ? 1 : -1);
    return acc * c;
}

// Direct divisor scan for G_j, written from the defining sums.
Rational G_coefficient(unsigned j, std::size_t n)
{
    Rational s;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d)
            continue;
        Rational dp = Rational(static_cast<long>(d)).pow(j - 1);
        if (j == 1)
            s += Rational(arith::to_int(arith::chi_minus3(d)));
        else if (j % 2 == 0)
            s -= (n / d) % 3 ? dp : Rational();
        else
            s += dp * Rational(arith::to_int(arith::chi_minus3(n / d)));
    }
    return s;
}

} // namespace

TEST_SUITE("zoo")
{
    TEST_CASE("Eisenstein series")
    {
        CHECK(eisenstein(1, 2) == q_series({1, -24, -72}));
        CHECK(eisenstein(2, 1)[1] == Rational(240));
        for (unsigned k = 1; k <= 6; ++k)
            CHECK(eisenstein(k, 5)[0] == Rational(1));
    }

    TEST_CASE("divisor series")
    {
        CHECK(L_series(2, 3) == q_series({0, 1, 3, 4}));
        auto L1 = L_series(1, 30);
        for (std::uint64_t n = 1; n <= 30; ++n)
            CHECK(L1[n] == Rational(static_cast<long>(arith::divisors(n).size())));
        CHECK(L_series(2, 40) == (one(40) - eisenstein(1, 40)) * Rational(1, 24));
    }

    TEST_CASE("F_j")
    {
        CHECK(F_series(1, 0)[0] == Rational(1, 24));
        CHECK(F_series(2, 2) == q_series({0, -1, -6}));
        QSeries iterate = F_series(1, 40);
        for (unsigned j = 1; j <= 8; ++j) {
            CHECK(F_series(j, 40) == iterate);
            iterate = theta_op(iterate);
        }
    }

    TEST_CASE("G_j")
    {
        CHECK(G_series(1, 1) == q_series({Rational(1, 6), 1}));
        CHECK(G_series(2, 1)[1] == Rational(-1));
        for (unsigned j = 1; j <= 6; ++j) {
            auto G = G_series(j, 30);
            for (std::size_t n = 1; n <= 30; ++n)
                CHECK(G[n] == G_coefficient(j, n));
        }
        auto G1 = G_series(1, 60), G2 = G_series(2, 60);
        CHECK((G1 * G1 + G2) * Rational(36) == eisenstein(1, 60));
    }

    TEST_CASE("H_j")
    {
        CHECK(H_series(2, 2)[2] == Rational(-1));
        for (unsigned j = 1; j <= 5; ++j)
            CHECK(H_series(j, 40) == H_inner_oracle(j, 40));
    }

    TEST_CASE("H_{j,t,r}")
    {
        CHECK(H_ktr_series(1, 1, 1, Rational(-2), 30) == L_series(2, 30));
        for (unsigned j = 1; j <= 3; ++j)
            for (unsigned t = 1; t <= 3; ++t)
                for (unsigned r = 1; r <= 3; ++r)
                    for (long a = -2; a <= 2; ++a) {
                        auto h = H_ktr_series(j, t, r, Rational(a), 20);
                        CHECK(h[0] == Rational(0));
                        CHECK(h == H_ktr_by_division(j, t, r, Rational(a), 20));
                    }
        CHECK(H_ktr_series(2, 1, 1, Rational(1, 3), 15) == H_ktr_by_division(2, 1, 1, Rational(1, 3), 15));
    }

    TEST_CASE("g_k")
    {
        CHECK(g_series(1, 2) == q_series({0, 1, Rational(-1, 2)}));
        CHECK(g_series(1, 3)[3] == Rational(4, 3));
    }

    TEST_CASE("theta-type sums")
    {
        CHECK(pentagonal_theta(7) == q_series({1, -1, -1, 0, 0, 1, 0, 1}));
        CHECK(V_numerator(1, 2) == q_series({1, 5, -7}));
        auto euler = product_of_factors(200, [](std::size_t m) { return one(200) - q_pow(200, m); });
        CHECK(pentagonal_theta(200) == euler);
        CHECK(V_numerator(0, 200) == euler);
        CHECK(power(euler, 3) == U_denominator(200));
        CHECK(U_numerator(0, 100) == U_denominator(100));
    }

    TEST_CASE("MacMahon and generalized nested sums")
    {
        CHECK(macmahon_oracle(1, 3) == q_series({0, 1, 3, 4}));
        CHECK(macmahon_oracle(1, 40) == L_series(2, 40));
        CHECK(macmahon_oracle(2, 10).valuation() == 3);
        CHECK(macmahon_oracle(2, 10)[3] == Rational(1));
        CHECK(a_ktr_oracle(1, 1, 1, Rational(-2), 3) == q_series({0, 1, 3, 4}));
        for (unsigned k = 1; k <= 3; ++k)
            CHECK(a_ktr_oracle(k, 1, 1, Rational(-2), 30) == macmahon_oracle(k, 30));
        for (unsigned k = 1; k <= 3; ++k)
            for (unsigned r = 1; r <= 3; ++r)
                CHECK(a_ktr_oracle(k, 2, r, Rational(1), 40).valuation() == r * k * (k + 1) / 2);
    }

    TEST_CASE("srp moments")
    {
        auto s1 = srp_moment_oracle(1, 5), s2 = srp_moment_oracle(2, 5);
        CHECK(s1[3] == Rational(11, 6));
        CHECK(s2[3] == Rational(85, 36));
        CHECK(s1[1] == Rational(1));
    }

    TEST_CASE("cyclotomic polynomials")
    {
        CHECK(cyclotomic(1) == IntPolynomial({-1, 1}));
        CHECK(cyclotomic(3) == IntPolynomial({1, 1, 1}));
        CHECK(cyclotomic(6) == IntPolynomial({1, -1, 1}));
        CHECK(cyclotomic(105).coefficient(7) == -2);
        for (unsigned n = 1; n <= 40; ++n) {
            IntPolynomial prod({1});
            for (auto d : arith::divisors(n))
                prod = prod * cyclotomic(static_cast<unsigned>(d));
            CHECK(prod == IntPolynomial::x_power_minus_one(n));
            CHECK(cyclotomic(n).degree() == static_cast<long>(arith::jordan_totient(1, n).get_si()));
        }
        CHECK(phi_derivative_ratio_oracle(3, 1) == Rational(1));
    }

    TEST_CASE("log-derivative of cyclotomic polynomials is -(k-1)! varsigma_k")
    {
        for (unsigned n = 2; n <= 30; ++n)
            for (unsigned k = 1; k <= 5; ++k) {
                CAPTURE(n);
                CAPTURE(k);
                CHECK(log_cyclotomic_derivative_oracle(n, k) == -Rational(factorial(k - 1)) * varsigma(k, n));
            }
        CHECK_THROWS_AS(varsigma(1, 1), std::invalid_argument);
        CHECK_THROWS_AS(varsigma(0, 5), std::invalid_argument);
    }

    TEST_CASE("registry")
    {
        auto e2 = build_named_series("E2k", {{"k", Rational(1)}}, 2);
        CHECK(e2.series == eisenstein(1, 2));
        CHECK(build_named_series("Hjtr", {{"j", 1}, {"t", 1}, {"r", 1}, {"a", Rational(-2)}}, 10).series ==
              L_series(2, 10));
        for (const auto& name : named_series_names()) {
            Params p;
            for (const auto& key : named_series_parameters(name))
                p[key] = Rational(1);
            CHECK(build_named_series(name, p, 8).series.order() == 8);
        }
        try {
            build_named_series("nope", {}, 3);
            FAIL("expected UnknownSeries");
        } catch (const UnknownSeries& e) {
            CHECK(std::string(e.what()).find("E2k") != std::string::npos);
        }
        CHECK_THROWS_AS(build_named_series("E2k", {}, 3), std::invalid_argument);
        CHECK_THROWS_AS(build_named_series("E2k", {{"k", 1}, {"j", 1}}, 3), std::invalid_argument);
        CHECK_THROWS_AS(build_named_series("E2k", {{"k", 0}}, 3), std::invalid_argument);
        CHECK_THROWS_AS(build_named_series("E2k", {{"k", Rational(1, 2)}}, 3), std::invalid_argument);
    }

    TEST_CASE("constructors are deterministic")
    {
        CHECK(macmahon_oracle(3, 30) == macmahon_oracle(3, 30));
        CHECK(H_ktr_series(2, 2, 1, Rational(1), 30) == H_ktr_series(2, 2, 1, Rational(1), 30));
        CHECK(srp_moment_oracle(2, 20) == srp_moment_oracle(2, 20));
    }
}
