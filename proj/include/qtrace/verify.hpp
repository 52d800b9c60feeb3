#pragma once

// One check per identity: both (or all three) sides are built through disjoint
// code paths and compared coefficient by coefficient in exact arithmetic.
// Equality is certified through the truncation order only.

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qtrace/rational.hpp"
#include "qtrace/registry.hpp"
#include "qtrace/series.hpp"

namespace qtrace::verify {

enum class Status { verified, mismatch, error };

std::string to_string(Status s);

struct Mismatch {
    std::size_t n = 0;   // smallest exponent (or derivative order) that disagrees
    Rational lhs;
    Rational rhs;
    std::string sides;   // which pair disagreed, e.g. "oracle vs bell"
};

struct VerificationReport {
    std::string theorem_id;
    zoo::Params parameters;
    std::size_t order = 0;
    Status status = Status::error;
    std::optional<Mismatch> first_mismatch;
    std::chrono::milliseconds elapsed{0};
    std::string message; // populated for Status::error
};

/// Negative control: add `delta` to coefficient `n` of the `input`-th (1-based)
/// generator fed to the formula side (F_j, G_j, H_j, g_j, varsigma_j or E_{2j}).
struct Tamper {
    unsigned input = 1;
    std::size_t n = 0;
    Rational delta = Rational(1);
};

struct Options {
    std::optional<Tamper> tamper;
};

/// V_numerator(2k)/penta vs 24^k B_k(F_1..F_k) vs Tr_k(phi_V; E_2..E_{2k}).
VerificationReport verify_v_even(unsigned k, std::size_t order, const Options& opts = {});

/// V_numerator(k)/penta vs 6^k B_k(G_1..G_k); for even k also vs 24^{k/2} B_{k/2}(F).
VerificationReport verify_v_general(unsigned k, std::size_t order, const Options& opts = {});

/// U_numerator(k)/U_denominator vs 8^k B_k(3F_1..3F_k).
VerificationReport verify_u(unsigned k, std::size_t order, const Options& opts = {});

/// MacMahon nested sum vs (1/k!) B_k(H_1..H_k) vs Lambda_k(L_2, L_4, ..., L_{2k}).
VerificationReport verify_macmahon(unsigned k, std::size_t order, const Options& opts = {});

/// a_ktr_oracle vs (1/k!) B_k(H_{1,t,r}..H_{k,t,r}).
VerificationReport verify_a_ktr(unsigned k, unsigned t, unsigned r, const Rational& a, std::size_t order,
                                const Options& opts = {});

/// srp moments / prod(1 + q^m) vs B_k(g_1..g_k).
VerificationReport verify_srp(unsigned k, std::size_t order, const Options& opts = {});

/// Phi_n^{(k)}(1)/Phi_n(1) vs Tr_k(phi_Phi; varsigma) vs B_k(-0! varsigma_1, ..., -(k-1)! varsigma_k).
/// The report order is k.
VerificationReport verify_lehmer(unsigned n, unsigned k, const Options& opts = {});

/// theta E_2 = (E_2^2 - E_4)/12, theta E_4 = (E_2 E_4 - E_6)/3, theta E_6 = (E_2 E_6 - E_4^2)/2.
VerificationReport verify_ramanujan(std::size_t order, const Options& opts = {});

/// Theorem ids accepted by run_task: v-even v-general u macmahon a-ktr srp lehmer ramanujan.
const std::vector<std::string>& theorem_ids();

struct Task {
    std::string theorem;
    zoo::Params params;
    std::size_t order = 0;
    Options options;
};

/// Runs one task. Precondition violations throw std::invalid_argument; any
/// failure while building the sides yields a report with Status::error.
VerificationReport run_task(const Task& task);

/// Limits for the built-in grid; unset fields keep the acceptance defaults.
struct GridConfig {
    std::optional<std::size_t> order;       // overrides every per-theorem order
    std::vector<std::string> only;          // empty = all theorems
    std::optional<unsigned> k_max;
    std::optional<unsigned> t_max;
    std::optional<unsigned> r_max;
    std::optional<long> a_min;
    std::optional<long> a_max;
    std::optional<unsigned> n_max;
};

/// The acceptance grid: v-even k<=6 N=60, v-general k<=8 N=60, u k<=5 N=60,
/// macmahon k<=5 N=50, a-ktr k,t,r<=3 a in [-2,2] N=40, srp k<=4 N=35,
/// lehmer n in [2,30] k<=5, ramanujan N=200.
std::vector<Task> default_grid(const GridConfig& config = {});

/// Runs every task (concurrently when jobs > 1). Failures are recorded per
/// report and never abort the batch; the result is sorted by (theorem, params).
std::vector<VerificationReport> verify_all(const std::vector<Task>& tasks, unsigned jobs = 1);

bool report_less(const VerificationReport& a, const VerificationReport& b);

} // namespace qtrace::verify
