#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtrace/rational.hpp"
#include "qtrace/series.hpp"

namespace qtrace::verify {

struct BasisElement {
    std::string name;
    QSeries series;
};

/// Exact linear combination of basis series that reproduces the input through
/// residual_order. Evidence at a finite order, not a proof.
struct QuasimodularCertificate {
    int level = 1;
    unsigned weight_bound = 0;
    std::vector<std::string> basis;
    std::vector<Rational> coefficients;
    std::size_t residual_order = 0;
};

/// The recognizer needs order >= 2 * basis size.
struct InsufficientOrder : std::invalid_argument {
    InsufficientOrder(std::size_t required_order, std::size_t given_order);
    std::size_t required;
    std::size_t given;
};

/// Level 1: monomials E2^a E4^b E6^c with 2a + 4b + 6c <= weight_bound, 1 included.
/// Level 3: 1, L_l(q), L_l(q^3) for even 2 <= l <= weight_bound, and
/// sum (sum_{d|n} chi_{-3}(d) d^l) q^n for even 0 <= l <= weight_bound.
std::vector<BasisElement> quasimodular_basis(int level, unsigned weight_bound, std::size_t order);

std::size_t quasimodular_basis_size(int level, unsigned weight_bound);

/// Solves for s as a combination of the basis through s.order(). Returns
/// nullopt when no combination matches. Throws InsufficientOrder when the
/// order is below twice the basis size and std::invalid_argument for an odd or
/// zero weight bound or an unsupported level.
std::optional<QuasimodularCertificate> recognize_quasimodular(const QSeries& s, unsigned weight_bound, int level);

/// Re-expands a certificate at its residual order.
QSeries expand_certificate(const QuasimodularCertificate& cert);

} // namespace qtrace::verify
