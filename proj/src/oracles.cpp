#include "qtrace/oracles.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

#include "qtrace/partitions.hpp"
#include "qtrace/zoo.hpp"

namespace qtrace::zoo {

namespace {

// Sum over 0 < m_1 < ... < m_k with sum (weight * m_i) <= order of the product
// of factor(m_i). Factors are built once per m; partial products are shared
// along the search path.
QSeries nested_sum(unsigned k, std::size_t weight, std::size_t order,
                   const std::function<QSeries(std::size_t)>& factor)
{
    if (k == 0)
        throw std::invalid_argument("nested sum depth must be positive");
    std::vector<QSeries> cache;
    auto factor_at = [&](std::size_t m) -> const QSeries& {
        while (cache.size() < m)
            cache.push_back(factor(cache.size() + 1));
        return cache[m - 1];
    };

    QSeries total(order, Rational());
    // remaining depth d needs at least d more indices, each > last, so the
    // smallest admissible completion costs weight * (d m + d(d+1)/2) beyond last.
    std::function<void(unsigned, std::size_t, std::size_t, const QSeries&)> dfs =
        [&](unsigned depth, std::size_t last, std::size_t used, const QSeries& partial) {
            if (depth == k) {
                total += partial;
                return;
            }
            const std::size_t left = k - depth;
            for (std::size_t m = last + 1;; ++m) {
                std::size_t min_cost = weight * (left * m + left * (left - 1) / 2);
                if (used + min_cost > order)
                    break;
                dfs(depth + 1, m, used + weight * m, partial * factor_at(m));
            }
        };
    dfs(0, 0, 0, QSeries::constant(order, Rational(1)));
    return total;
}

} // namespace

QSeries H_inner_oracle(unsigned j, std::size_t order)
{
    if (j == 0)
        throw std::invalid_argument("H_inner_oracle: j must be positive");
    QSeries acc(order, Rational());
    for (std::size_t m = 1; j * m <= order; ++m) {
        QSeries one_minus = QSeries::constant(order, Rational(1)) - QSeries::monomial(order, m, Rational(1));
        acc += divide(QSeries::monomial(order, j * m, Rational(1)), power(one_minus, 2 * j));
    }
    return acc * Rational(Integer(j % 2 ? 1 : -1) * factorial(j - 1));
}

QSeries macmahon_oracle(unsigned k, std::size_t order)
{
    return nested_sum(k, 1, order, [order](std::size_t m) {
        QSeries one_minus = QSeries::constant(order, Rational(1)) - QSeries::monomial(order, m, Rational(1));
        return divide(QSeries::monomial(order, m, Rational(1)), one_minus * one_minus);
    });
}

QSeries a_ktr_oracle(unsigned k, unsigned t, unsigned r, const Rational& a, std::size_t order)
{
    if (t == 0 || r == 0)
        throw std::invalid_argument("a_ktr_oracle: t and r must be positive");
    return nested_sum(k, r, order, [&, order](std::size_t m) {
        QSeries base = QSeries::constant(order, Rational(1)) + QSeries::monomial(order, m, a) +
                       QSeries::monomial(order, 2 * m, Rational(1));
        return divide(QSeries::monomial(order, r * m, Rational(1)), power(base, t));
    });
}

QSeries srp_moment_oracle(unsigned k, std::size_t order)
{
    if (k == 0)
        throw std::invalid_argument("srp_moment_oracle: k must be positive");
    std::vector<Rational> c(order + 1);
    for (unsigned n = 1; n <= order; ++n)
        partitions::for_each_distinct_partition(n, [&](const partitions::Partition& p) {
            c[n] += partitions::srp(p).pow(k);
        });
    return QSeries(std::move(c));
}

Rational phi_derivative_ratio_oracle(unsigned n, unsigned k)
{
    if (n < 2)
        throw std::invalid_argument("cyclotomic derivative ratio needs n >= 2");
    const auto shifted = cyclotomic(n).taylor_shift(1);
    // Phi^{(k)}(1) = k! [u^k] Phi(1 + u)
    return Rational(factorial(k) * shifted.coefficient(k)) / Rational(shifted.coefficient(0));
}

Rational log_cyclotomic_derivative_oracle(unsigned n, unsigned k)
{
    if (n < 2)
        throw std::invalid_argument("cyclotomic log-derivative needs n >= 2");
    const auto shifted = cyclotomic(n).taylor_shift(1);
    const Rational c0(shifted.coefficient(0));
    QSeries s = from_coefficient_function(k, [&](std::size_t i) { return Rational(shifted.coefficient(i)) / c0; });
    return log(s)[k] * Rational(factorial(k));
}

} // namespace qtrace::zoo
