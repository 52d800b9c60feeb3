#pragma once

// Brute-force constructions used as the independent side of every identity
// check. Nothing here may use the Bell polynomials or the partition trace; the
// oracle library is deliberately not linked against qtrace_bell.

#include <cstddef>

#include "qtrace/rational.hpp"
#include "qtrace/series.hpp"

namespace qtrace::zoo {

/// (-1)^{j-1} (j-1)! sum_{m>=1} q^{jm} / (1 - q^m)^{2j}, summed term by term.
QSeries H_inner_oracle(unsigned j, std::size_t order);

/// A_k(q) = sum_{0<m_1<...<m_k} prod q^{m_i} / (1 - q^{m_i})^2, by depth-first
/// search over index tuples with sum m_i <= N.
QSeries macmahon_oracle(unsigned k, std::size_t order);

/// A_{k,t,r}(a; q) = sum_{0<m_1<...<m_k} prod q^{r m_i} / (1 + a q^{m_i} + q^{2 m_i})^t.
QSeries a_ktr_oracle(unsigned k, unsigned t, unsigned r, const Rational& a, std::size_t order);

/// sum_{n=1}^{N} s_k(n) q^n, s_k(n) = sum over distinct partitions of n of srp^k.
QSeries srp_moment_oracle(unsigned k, std::size_t order);

/// Phi_n^{(k)}(1) / Phi_n(1) from the Taylor expansion of Phi_n(1 + u). n >= 2.
Rational phi_derivative_ratio_oracle(unsigned n, unsigned k);

/// d^k/dx^k log Phi_n(x) at x = 1, via the series log of Phi_n(1 + u) / Phi_n(1).
Rational log_cyclotomic_derivative_oracle(unsigned n, unsigned k);

} // namespace qtrace::zoo
