#include "qtrace/partitions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "qtrace/arith.hpp"

namespace qtrace::partitions {

Partition::Partition(std::vector<unsigned> multiplicities) : m_(std::move(multiplicities))
{
    unsigned weight = 0;
    for (std::size_t j = 1; j <= m_.size(); ++j) {
        weight += static_cast<unsigned>(j) * m_[j - 1];
        length_ += m_[j - 1];
    }
    for (std::size_t j = weight + 1; j <= m_.size(); ++j)
        if (m_[j - 1] != 0)
            throw std::logic_error("partition multiplicity beyond its weight");
    m_.resize(weight, 0);
}

Partition Partition::from_parts(std::span<const unsigned> parts)
{
    unsigned k = 0;
    for (auto p : parts) {
        if (p == 0)
            throw std::invalid_argument("partition parts must be positive");
        k += p;
    }
    std::vector<unsigned> m(k, 0);
    for (auto p : parts)
        ++m[p - 1];
    return Partition(std::move(m));
}

std::vector<unsigned> Partition::parts() const
{
    std::vector<unsigned> out;
    out.reserve(length_);
    for (unsigned j = weight(); j >= 1; --j)
        out.insert(out.end(), m_[j - 1], j);
    return out;
}

bool Partition::is_distinct() const
{
    return std::all_of(m_.begin(), m_.end(), [](unsigned m) { return m <= 1; });
}

PartitionStream::PartitionStream(unsigned n, bool distinct_parts)
    : n_(n), distinct_(distinct_parts), remaining_(n)
{
    if (n == 0)
        throw std::invalid_argument("partition enumeration needs n >= 1");
}

// Can `remaining` be written with parts no larger than `part` (strictly smaller
// parts after this one, in the distinct case)?
bool PartitionStream::feasible(unsigned remaining, unsigned part) const
{
    if (!distinct_)
        return true;
    return remaining <= part * (part + 1) / 2;
}

// Greedily append the largest admissible parts until the sum reaches n.
void PartitionStream::extend()
{
    while (remaining_ > 0) {
        unsigned cap = parts_.empty() ? n_ : (distinct_ ? parts_.back() - 1 : parts_.back());
        unsigned p = std::min(remaining_, cap);
        parts_.push_back(p);
        remaining_ -= p;
    }
}

std::optional<Partition> PartitionStream::next()
{
    if (!started_) {
        started_ = true;
        extend();
        return Partition::from_parts(parts_);
    }
    while (!parts_.empty()) {
        unsigned p = parts_.back();
        parts_.pop_back();
        remaining_ += p;
        if (p <= 1)
            continue;
        unsigned q = p - 1;
        // With q as the next part, the rest must fit in parts below q (distinct)
        // or at most q (ordinary).
        unsigned rest = remaining_ - q;
        if (distinct_ ? !feasible(rest, q - 1) : false)
            continue;
        parts_.push_back(q);
        remaining_ -= q;
        extend();
        return Partition::from_parts(parts_);
    }
    return std::nullopt;
}

PartitionStream enumerate_partitions(unsigned k)
{
    return PartitionStream(k, false);
}

PartitionStream enumerate_distinct_partitions(unsigned n)
{
    return PartitionStream(n, true);
}

void for_each_partition(unsigned k, const std::function<void(const Partition&)>& fn)
{
    auto s = enumerate_partitions(k);
    while (auto p = s.next())
        fn(*p);
}

void for_each_distinct_partition(unsigned n, const std::function<void(const Partition&)>& fn)
{
    auto s = enumerate_distinct_partitions(n);
    while (auto p = s.next())
        fn(*p);
}

Rational srp(const Partition& lambda)
{
    if (lambda.weight() == 0)
        throw std::invalid_argument("srp of the empty partition");
    Rational acc;
    for (unsigned j = 1; j <= lambda.weight(); ++j)
        if (lambda.multiplicity(j))
            acc += Rational(Integer(lambda.multiplicity(j)), Integer(j));
    return acc;
}

Rational phi_one(const Partition&)
{
    return Rational(1);
}

Rational phi_bell(const Partition& p)
{
    Integer den = 1;
    for (unsigned j = 1; j <= p.weight(); ++j) {
        unsigned m = p.multiplicity(j);
        den *= factorial(m) * ipow(factorial(j), m);
    }
    return Rational(factorial(p.weight()), den);
}

Rational phi_v(const Partition& p)
{
    const unsigned k = p.weight();
    Rational acc(ipow(4, k) * factorial(2 * k));
    for (unsigned j = 1; j <= k; ++j) {
        unsigned m = p.multiplicity(j);
        if (m == 0)
            continue;
        Rational base = Rational(ipow(4, j) - 1) * arith::bernoulli(2 * j) /
                        Rational(Integer(2 * j) * factorial(2 * j));
        acc *= base.pow(m) / Rational(factorial(m));
    }
    return acc;
}

Rational phi_cyclotomic(const Partition& p)
{
    Rational acc(factorial(p.weight()));
    for (unsigned j = 1; j <= p.weight(); ++j) {
        unsigned m = p.multiplicity(j);
        if (m == 0)
            continue;
        Rational term(Integer(m % 2 ? -1 : 1), factorial(m) * ipow(j, m));
        acc *= term;
    }
    return acc;
}

namespace {

const std::array<WeightFunction, 4>& registry()
{
    static const std::array<WeightFunction, 4> table{{
        {"one", phi_one},
        {"phi_B", phi_bell},
        {"phi_V", phi_v},
        {"phi_Phi", phi_cyclotomic},
    }};
    return table;
}

} // namespace

const WeightFunction& weight_function(std::string_view name)
{
    for (const auto& w : registry())
        if (w.name == name)
            return w;
    throw std::out_of_range("unknown weight function '" + std::string(name) + "'");
}

std::vector<std::string> weight_function_names()
{
    std::vector<std::string> out;
    for (const auto& w : registry())
        out.push_back(w.name);
    return out;
}

} // namespace qtrace::partitions
