#pragma once

// q-series constructors. Every function returns a Series<Rational> truncated
// at the requested order N (inclusive); the q^{1/24} and zeta prefactors of
// eta and the triple product never appear, since only pure q-series are built.

#include <cstddef>

#include "qtrace/int_polynomial.hpp"
#include "qtrace/rational.hpp"
#include "qtrace/series.hpp"

namespace qtrace::zoo {

/// E_{2k} = 1 - (4k / B_{2k}) sum sigma_{2k-1}(n) q^n, k >= 1.
QSeries eisenstein(unsigned k, std::size_t order);

/// L_l = sum sigma_{l-1}(n) q^n, l >= 1.
QSeries L_series(unsigned l, std::size_t order);

/// F_1 = E_2 / 24; F_j = -sum n^{j-1} sigma_1(n) q^n for j >= 2.
QSeries F_series(unsigned j, std::size_t order);

/// G_1 = 1/6 + sum (sum_{d|n} chi(d)) q^n;
/// even j: -sum (sum_{d|n, 3 !| n/d} d^{j-1}) q^n;
/// odd j >= 3: sum (sum_{d|n} chi(n/d) d^{j-1}) q^n, with chi = (-3/.).
QSeries G_series(unsigned j, std::size_t order);

/// H_j = ((-1)^{j-1} (j-1)! / (2j-1)!) sum_{l=1}^{2j} t(j,l) L_l.
QSeries H_series(unsigned j, std::size_t order);

/// H_{j,t,r}(a; q) = (-1)^{j-1} (j-1)! sum_{m>=1} q^{rjm} / (1 + a q^m + q^{2m})^{tj}.
QSeries H_ktr_series(unsigned j, unsigned t, unsigned r, const Rational& a, std::size_t order);

/// g_k = sum n^{-k} (sum_{d|n} (-1)^{d-1} d^{2k-1}) q^n.
QSeries g_series(unsigned k, std::size_t order);

/// sum_{n in Z} (-1)^n q^{n(3n+1)/2}
QSeries pentagonal_theta(std::size_t order);

/// sum_{n in Z} (-1)^n (6n+1)^k q^{n(3n+1)/2}
QSeries V_numerator(unsigned k, std::size_t order);

/// sum_{n>=0} (-1)^n (2n+1)^{2k+1} q^{n(n+1)/2}
QSeries U_numerator(unsigned k, std::size_t order);

/// sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}
QSeries U_denominator(std::size_t order);

/// sum (sum_{d|n} chi(d) d^l) q^n with chi = (-3/.); l = 0 allowed.
QSeries twisted_divisor_series(unsigned l, std::size_t order);

/// n-th cyclotomic polynomial from prod_{d|n} (x^d - 1)^{mu(n/d)}. n >= 1.
IntPolynomial cyclotomic(unsigned n);

/// varsigma_k(n) = -(1/(k-1)!) sum_{m=1}^{k} (B_m / m) s(k,m) J_m(n), B_1 = +1/2.
/// Throws std::invalid_argument for n < 2 or k < 1.
Rational varsigma(unsigned k, unsigned n);

} // namespace qtrace::zoo
