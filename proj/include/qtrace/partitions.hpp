#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtrace/rational.hpp"
#include "qtrace/series.hpp"

namespace qtrace::partitions {

/// A partition of k in frequency notation (1^{m_1}, ..., k^{m_k}).
class Partition {
public:
    /// multiplicities[j-1] = m_j. Trailing entries are normalized so that the
    /// stored vector has exactly weight() entries.
    explicit Partition(std::vector<unsigned> multiplicities);

    /// From parts in any order.
    static Partition from_parts(std::span<const unsigned> parts);

    /// k = sum j m_j
    unsigned weight() const { return static_cast<unsigned>(m_.size()); }
    /// l(lambda) = sum m_j
    unsigned length() const { return length_; }
    /// m_j for j >= 1; zero beyond the weight.
    unsigned multiplicity(unsigned j) const { return j >= 1 && j <= m_.size() ? m_[j - 1] : 0; }
    std::span<const unsigned> multiplicities() const { return m_; }

    /// Parts in nonincreasing order.
    std::vector<unsigned> parts() const;

    bool is_distinct() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> m_;
    unsigned length_ = 0;
};

/// Streams partitions of n in reverse-lexicographic order of their parts,
/// e.g. (4), (3,1), (2,2), (2,1,1), (1,1,1,1). Only the current partition is held.
class PartitionStream {
public:
    explicit PartitionStream(unsigned n, bool distinct_parts = false);

    /// Next partition, or nullopt once exhausted.
    std::optional<Partition> next();

private:
    bool feasible(unsigned remaining, unsigned part) const;
    void extend();

    unsigned n_;
    bool distinct_;
    bool started_ = false;
    std::vector<unsigned> parts_;
    unsigned remaining_;
};

PartitionStream enumerate_partitions(unsigned k);
PartitionStream enumerate_distinct_partitions(unsigned n);

void for_each_partition(unsigned k, const std::function<void(const Partition&)>& fn);
void for_each_distinct_partition(unsigned n, const std::function<void(const Partition&)>& fn);

/// Sum of reciprocals of the parts.
Rational srp(const Partition& lambda);

/// A named weight phi: Partition -> Q.
struct WeightFunction {
    std::string name;
    std::function<Rational(const Partition&)> eval;

    Rational operator()(const Partition& p) const { return eval(p); }
};

/// phi = 1
Rational phi_one(const Partition& p);
/// k! prod 1 / (m_j! (j!)^{m_j})
Rational phi_bell(const Partition& p);
/// 4^k (2k)! prod (1/m_j!) ((4^j - 1) B_{2j} / ((2j)(2j)!))^{m_j}
Rational phi_v(const Partition& p);
/// k! prod (-1)^{m_j} / (m_j! j^{m_j})
Rational phi_cyclotomic(const Partition& p);

/// Registered names: "one", "phi_B", "phi_V", "phi_Phi". Throws std::out_of_range.
const WeightFunction& weight_function(std::string_view name);
std::vector<std::string> weight_function_names();

/// prod_j x_j^{m_j}; x must have at least weight() entries.
template <CoefficientRing R>
R monomial(const Partition& lambda, std::span<const R> x)
{
    R acc = ring_traits<R>::one(x[0]);
    for (unsigned j = 1; j <= lambda.weight(); ++j)
        for (unsigned e = 0; e < lambda.multiplicity(j); ++e)
            acc = acc * x[j - 1];
    return acc;
}

/// Tr_k(phi; x_1..x_k) = sum_{lambda |- k} phi(lambda) prod x_j^{m_j}.
template <CoefficientRing R>
R trace(unsigned k, const WeightFunction& phi, std::span<const R> x)
{
    if (k == 0 || x.size() != k)
        throw std::invalid_argument("trace: need exactly k >= 1 values");
    // powers[j-1][e] = x_j^e for e <= k/j
    std::vector<std::vector<R>> powers(k);
    for (unsigned j = 1; j <= k; ++j) {
        powers[j - 1].push_back(ring_traits<R>::one(x[0]));
        for (unsigned e = 1; e <= k / j; ++e)
            powers[j - 1].push_back(powers[j - 1].back() * x[j - 1]);
    }
    R acc = ring_traits<R>::zero(x[0]);
    auto stream = enumerate_partitions(k);
    while (auto lambda = stream.next()) {
        Rational w = phi(*lambda);
        if (w.is_zero())
            continue;
        std::optional<R> term;
        for (unsigned j = 1; j <= k; ++j) {
            unsigned m = lambda->multiplicity(j);
            if (m == 0)
                continue;
            term = term ? *term * powers[j - 1][m] : powers[j - 1][m];
        }
        acc = acc + *term * w;
    }
    return acc;
}

template <CoefficientRing R>
R trace(unsigned k, const WeightFunction& phi, const std::vector<R>& x)
{
    return trace<R>(k, phi, std::span<const R>(x));
}

} // namespace qtrace::partitions
