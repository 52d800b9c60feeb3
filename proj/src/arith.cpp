#include "qtrace/arith.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qtrace::arith {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)}; // B_0..B_m, recurrence convention B_1 = -1/2

void extend_bernoulli(unsigned m)
{
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    for (unsigned n = static_cast<unsigned>(bernoulli_table.size()); n <= m; ++n) {
        Rational acc;
        for (unsigned j = 0; j < n; ++j)
            acc += Rational(binomial(n + 1, j)) * bernoulli_table[j];
        bernoulli_table.push_back(-acc / Rational(n + 1));
    }
}

} // namespace

Rational bernoulli(unsigned m)
{
    Rational value;
    {
        std::lock_guard lock(bernoulli_mutex);
        extend_bernoulli(m);
        value = bernoulli_table[m];
    }
    return m == 1 ? -value : value;
}

Integer stirling_first(unsigned k, long m)
{
    if (k == 0 || m < 1 || m > static_cast<long>(k))
        return 0;
    // row[i] = s(n, i); s(n+1, i) = s(n, i-1) - n s(n, i)
    std::vector<Integer> row{0, 1};
    for (unsigned n = 1; n < k; ++n) {
        std::vector<Integer> next(n + 2, 0);
        for (unsigned i = 1; i <= n + 1; ++i) {
            next[i] = row[i - 1];
            if (i <= n)
                next[i] -= Integer(n) * row[i];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(m)];
}

std::vector<Integer> central_factorial_row(unsigned j)
{
    if (j == 0)
        throw std::invalid_argument("central_factorial_row: j must be positive");
    // Expand prod_{i=-(j-1)}^{j-1} (x - i), coefficients in increasing degree.
    std::vector<Integer> poly{1};
    for (long i = -static_cast<long>(j) + 1; i < static_cast<long>(j); ++i) {
        std::vector<Integer> next(poly.size() + 1, 0);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] += poly[d];
            next[d] -= Integer(i) * poly[d];
        }
        poly = std::move(next);
    }
    return poly; // degree 2j-1, so exactly 2j entries
}

Integer central_factorial(unsigned j, long l)
{
    if (j == 0 || l < 1 || l > 2 * static_cast<long>(j))
        return 0;
    return central_factorial_row(j)[static_cast<std::size_t>(l - 1)];
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t t = 0; t < base; ++t)
                out.push_back(out[t] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer jordan_totient(unsigned m, std::uint64_t n)
{
    if (m == 0 || n == 0)
        throw std::invalid_argument("jordan_totient: m and n must be positive");
    // n^m prod (1 - p^{-m}) = prod over p^e || n of p^{m(e-1)} (p^m - 1)
    Integer r = 1;
    for (auto [p, e] : factorize(n)) {
        Integer pm = ipow(Integer(static_cast<unsigned long>(p)), m);
        r *= ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(m) * (e - 1)) * (pm - 1);
    }
    return r;
}

CharacterValue chi_minus3(std::uint64_t d)
{
    if (d == 0)
        throw std::invalid_argument("chi_minus3: argument must be positive");
    switch (d % 3) {
    case 1: return CharacterValue::one;
    case 2: return CharacterValue::minus_one;
    default: return CharacterValue::zero;
    }
}

Integer sigma(unsigned l, std::uint64_t n)
{
    Integer r = 0;
    for (auto d : divisors(n))
        r += ipow(Integer(static_cast<unsigned long>(d)), l);
    return r;
}

int mobius(std::uint64_t n)
{
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1)
            return 0;
        mu = -mu;
    }
    return mu;
}

} // namespace qtrace::arith
