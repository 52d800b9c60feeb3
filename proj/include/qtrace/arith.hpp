#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qtrace/rational.hpp"

namespace qtrace::arith {

/// Value of the character (-3/.) at a positive integer.
enum class CharacterValue : int { minus_one = -1, zero = 0, one = 1 };

inline int to_int(CharacterValue c) { return static_cast<int>(c); }

/// Bernoulli number with the convention B_1 = +1/2. Memoized; thread-safe.
Rational bernoulli(unsigned m);

/// Signed Stirling number of the first kind, x(x-1)...(x-k+1) = sum s(k,m) x^m.
/// Zero for m outside [1, k].
Integer stirling_first(unsigned k, long m);

/// Central factorial number t(j,l): sum_{l=1}^{2j} t(j,l) x^{l-1} = prod_{|i|<j} (x - i).
/// Zero for l outside [1, 2j].
Integer central_factorial(unsigned j, long l);

/// Coefficients t(j,1..2j) as a vector indexed by l-1.
std::vector<Integer> central_factorial_row(unsigned j);

Integer jordan_totient(unsigned m, std::uint64_t n);

CharacterValue chi_minus3(std::uint64_t d);

/// sum_{d | n} d^l
Integer sigma(unsigned l, std::uint64_t n);

int mobius(std::uint64_t n);

/// Prime factorization by trial division, as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// All positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

} // namespace qtrace::arith
