#include "qtrace/recognize.hpp"

#include <map>

#include "qtrace/zoo.hpp"

namespace qtrace::verify {

InsufficientOrder::InsufficientOrder(std::size_t required_order, std::size_t given_order)
    : std::invalid_argument("insufficient truncation order: need at least " + std::to_string(required_order) +
                            ", got " + std::to_string(given_order)),
      required(required_order), given(given_order)
{
}

namespace {

void check_arguments(int level, unsigned weight_bound)
{
    if (level != 1 && level != 3)
        throw std::invalid_argument("recognizer supports levels 1 and 3 only");
    if (weight_bound < 2 || weight_bound % 2 != 0)
        throw std::invalid_argument("weight bound must be an even integer >= 2");
}

struct Exponents {
    unsigned e2, e4, e6;
};

std::vector<Exponents> level_one_monomials(unsigned weight_bound)
{
    std::vector<Exponents> out;
    for (unsigned w = 0; w <= weight_bound; w += 2)
        for (unsigned a = w / 2 + 1; a-- > 0;)
            for (unsigned c = 0; 6 * c <= w - 2 * a; ++c) {
                unsigned rest = w - 2 * a - 6 * c;
                if (rest % 4 == 0)
                    out.push_back({a, rest / 4, c});
            }
    return out;
}

std::string monomial_name(const Exponents& e)
{
    std::string name;
    auto part = [&](const char* g, unsigned p) {
        if (p == 0)
            return;
        name += (name.empty() ? "" : "*") + std::string(g) + (p > 1 ? "^" + std::to_string(p) : "");
    };
    part("E2", e.e2);
    part("E4", e.e4);
    part("E6", e.e6);
    return name.empty() ? "1" : name;
}

// Row-reduces [A | b] in place over Q; returns the particular solution with
// free variables set to zero, or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> rows, std::size_t unknowns)
{
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        const Rational inv = Rational(1) / rows[rank][col];
        for (auto& x : rows[rank])
            x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero())
                continue;
            const Rational f = rows[r][col];
            for (std::size_t c = col; c <= unknowns; ++c)
                rows[r][c] -= f * rows[rank][c];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (!rows[r][unknowns].is_zero())
            return std::nullopt;
    std::vector<Rational> x(unknowns);
    for (std::size_t r = 0; r < rank; ++r)
        x[pivot_cols[r]] = rows[r][unknowns];
    return x;
}

} // namespace

std::vector<BasisElement> quasimodular_basis(int level, unsigned weight_bound, std::size_t order)
{
    check_arguments(level, weight_bound);
    std::vector<BasisElement> basis;
    if (level == 1) {
        const QSeries E2 = zoo::eisenstein(1, order);
        const QSeries E4 = zoo::eisenstein(2, order);
        const QSeries E6 = zoo::eisenstein(3, order);
        for (const auto& e : level_one_monomials(weight_bound))
            basis.push_back({monomial_name(e), power(E2, e.e2) * power(E4, e.e4) * power(E6, e.e6)});
        return basis;
    }
    basis.push_back({"1", QSeries::constant(order, Rational(1))});
    for (unsigned l = 2; l <= weight_bound; l += 2) {
        QSeries L = zoo::L_series(l, order);
        basis.push_back({"L" + std::to_string(l) + "(q)", L});
        basis.push_back({"L" + std::to_string(l) + "(q^3)", substitute_power(L, 3)});
    }
    for (unsigned l = 0; l <= weight_bound; l += 2)
        basis.push_back({"Lchi" + std::to_string(l) + "(q)", zoo::twisted_divisor_series(l, order)});
    return basis;
}

std::size_t quasimodular_basis_size(int level, unsigned weight_bound)
{
    check_arguments(level, weight_bound);
    if (level == 1)
        return level_one_monomials(weight_bound).size();
    return 1 + weight_bound + (weight_bound / 2 + 1);
}

std::optional<QuasimodularCertificate> recognize_quasimodular(const QSeries& s, unsigned weight_bound, int level)
{
    const std::size_t size = quasimodular_basis_size(level, weight_bound);
    if (s.order() < 2 * size)
        throw InsufficientOrder(2 * size, s.order());
    const auto basis = quasimodular_basis(level, weight_bound, s.order());

    std::vector<std::vector<Rational>> rows(s.order() + 1, std::vector<Rational>(size + 1));
    for (std::size_t n = 0; n <= s.order(); ++n) {
        for (std::size_t b = 0; b < size; ++b)
            rows[n][b] = basis[b].series[n];
        rows[n][size] = s[n];
    }
    auto x = solve(std::move(rows), size);
    if (!x)
        return std::nullopt;

    QuasimodularCertificate cert{level, weight_bound, {}, *x, s.order()};
    for (const auto& b : basis)
        cert.basis.push_back(b.name);
    if (expand_certificate(cert) != s)
        return std::nullopt;
    return cert;
}

QSeries expand_certificate(const QuasimodularCertificate& cert)
{
    const auto basis = quasimodular_basis(cert.level, cert.weight_bound, cert.residual_order);
    if (basis.size() != cert.coefficients.size())
        throw std::invalid_argument("certificate does not match its basis");
    QSeries acc(cert.residual_order, Rational());
    for (std::size_t b = 0; b < basis.size(); ++b)
        if (!cert.coefficients[b].is_zero())
            acc += basis[b].series * cert.coefficients[b];
    return acc;
}

} // namespace qtrace::verify
