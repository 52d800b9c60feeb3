#include "qtrace/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

#include "qtrace/bell.hpp"
#include "qtrace/oracles.hpp"
#include "qtrace/partitions.hpp"
#include "qtrace/zoo.hpp"

namespace qtrace::verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Side {
    std::string name;
    QSeries series;
};

// Smallest exponent at which any side disagrees with the first one.
std::optional<Mismatch> compare_sides(const std::vector<Side>& sides)
{
    std::optional<Mismatch> best;
    for (std::size_t i = 1; i < sides.size(); ++i) {
        const auto& a = sides[0].series;
        const auto& b = sides[i].series;
        if (a.order() != b.order())
            throw OrderMismatch("sides compared at different orders");
        for (std::size_t n = 0; n <= a.order(); ++n) {
            if (best && n >= best->n)
                break;
            if (a[n] != b[n]) {
                best = Mismatch{n, a[n], b[n], sides[0].name + " vs " + sides[i].name};
                break;
            }
        }
    }
    return best;
}

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw std::invalid_argument(message);
}

std::vector<QSeries> tampered(std::vector<QSeries> inputs, const Options& opts)
{
    if (opts.tamper && opts.tamper->input >= 1 && opts.tamper->input <= inputs.size()) {
        auto& s = inputs[opts.tamper->input - 1];
        s = s.with_coefficient(opts.tamper->n, s[opts.tamper->n] + opts.tamper->delta);
    }
    return inputs;
}

QSeries bell(unsigned k, const std::vector<QSeries>& x)
{
    return bell::bell_via_trace<QSeries>(k, x);
}

template <class Build>
VerificationReport run(std::string id, zoo::Params params, std::size_t order, Build&& build)
{
    VerificationReport report;
    report.theorem_id = std::move(id);
    report.parameters = std::move(params);
    report.order = order;
    const auto start = Clock::now();
    try {
        auto mismatch = build();
        report.status = mismatch ? Status::mismatch : Status::verified;
        report.first_mismatch = std::move(mismatch);
    } catch (const std::exception& e) {
        report.status = Status::error;
        report.message = e.what();
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return report;
}

std::vector<QSeries> build_inputs(unsigned k, const std::function<QSeries(unsigned)>& make)
{
    std::vector<QSeries> out;
    for (unsigned j = 1; j <= k; ++j)
        out.push_back(make(j));
    return out;
}

QSeries v_even_bell_side(unsigned k, std::size_t order, const Options& opts)
{
    auto F = tampered(build_inputs(k, [order](unsigned j) { return zoo::F_series(j, order); }), opts);
    return bell(k, F) * Rational(ipow(24, k));
}

} // namespace

std::string to_string(Status s)
{
    switch (s) {
    case Status::verified: return "verified";
    case Status::mismatch: return "mismatch";
    case Status::error: return "error";
    }
    return "error";
}

VerificationReport verify_v_even(unsigned k, std::size_t order, const Options& opts)
{
    require(k >= 1, "v-even needs k >= 1");
    return run("v-even", {{"k", Rational(k)}}, order, [&] {
        QSeries quotient = zoo::V_numerator(2 * k, order) / zoo::pentagonal_theta(order);
        QSeries bell_side = v_even_bell_side(k, order, opts);
        auto E = build_inputs(k, [order](unsigned j) { return zoo::eisenstein(j, order); });
        QSeries trace_side = partitions::trace<QSeries>(k, partitions::weight_function("phi_V"), E);
        return compare_sides({{"quotient", quotient}, {"bell(F)", bell_side}, {"trace(phi_V; E)", trace_side}});
    });
}

VerificationReport verify_v_general(unsigned k, std::size_t order, const Options& opts)
{
    require(k >= 1, "v-general needs k >= 1");
    return run("v-general", {{"k", Rational(k)}}, order, [&] {
        QSeries quotient = zoo::V_numerator(k, order) / zoo::pentagonal_theta(order);
        auto G = tampered(build_inputs(k, [order](unsigned j) { return zoo::G_series(j, order); }), opts);
        std::vector<Side> sides{{"quotient", quotient}, {"bell(G)", bell(k, G) * Rational(ipow(6, k))}};
        if (k % 2 == 0)
            sides.push_back({"bell(F)", v_even_bell_side(k / 2, order, {})});
        return compare_sides(sides);
    });
}

VerificationReport verify_u(unsigned k, std::size_t order, const Options& opts)
{
    require(k >= 1, "u needs k >= 1");
    return run("u", {{"k", Rational(k)}}, order, [&] {
        QSeries quotient = zoo::U_numerator(k, order) / zoo::U_denominator(order);
        auto F3 = tampered(build_inputs(k, [order](unsigned j) { return zoo::F_series(j, order) * Rational(3); }),
                           opts);
        return compare_sides({{"quotient", quotient}, {"bell(3F)", bell(k, F3) * Rational(ipow(8, k))}});
    });
}

VerificationReport verify_macmahon(unsigned k, std::size_t order, const Options& opts)
{
    require(k >= 1, "macmahon needs k >= 1");
    return run("macmahon", {{"k", Rational(k)}}, order, [&] {
        QSeries oracle = zoo::macmahon_oracle(k, order);
        auto H = tampered(build_inputs(k, [order](unsigned j) { return zoo::H_series(j, order); }), opts);
        QSeries bell_side = bell(k, H) * Rational(Integer(1), factorial(k));
        auto L = build_inputs(k, [order](unsigned j) { return zoo::L_series(2 * j, order); });
        QSeries lambda_side =
            bell::lambda_poly<QSeries>(k, L, QSeries::constant(order, Rational(1)));
        return compare_sides({{"oracle", oracle}, {"bell(H)/k!", bell_side}, {"lambda(L)", lambda_side}});
    });
}

VerificationReport verify_a_ktr(unsigned k, unsigned t, unsigned r, const Rational& a, std::size_t order,
                                const Options& opts)
{
    require(k >= 1 && t >= 1 && r >= 1, "a-ktr needs k, t, r >= 1");
    zoo::Params params{{"k", Rational(k)}, {"t", Rational(t)}, {"r", Rational(r)}, {"a", a}};
    return run("a-ktr", std::move(params), order, [&] {
        QSeries oracle = zoo::a_ktr_oracle(k, t, r, a, order);
        auto H = tampered(
            build_inputs(k, [&](unsigned j) { return zoo::H_ktr_series(j, t, r, a, order); }), opts);
        return compare_sides({{"oracle", oracle}, {"bell(H)/k!", bell(k, H) * Rational(Integer(1), factorial(k))}});
    });
}

VerificationReport verify_srp(unsigned k, std::size_t order, const Options& opts)
{
    require(k >= 1, "srp needs k >= 1");
    return run("srp", {{"k", Rational(k)}}, order, [&] {
        QSeries distinct = product_of_factors(order, [order](std::size_t m) {
            return QSeries::constant(order, Rational(1)) + QSeries::monomial(order, m, Rational(1));
        });
        QSeries oracle = zoo::srp_moment_oracle(k, order) / distinct;
        auto g = tampered(build_inputs(k, [order](unsigned j) { return zoo::g_series(j, order); }), opts);
        return compare_sides({{"oracle", oracle}, {"bell(g)", bell(k, g)}});
    });
}

VerificationReport verify_lehmer(unsigned n, unsigned k, const Options& opts)
{
    require(n >= 2, "lehmer needs n >= 2");
    require(k >= 1, "lehmer needs k >= 1");
    return run("lehmer", {{"n", Rational(n)}, {"k", Rational(k)}}, k, [&]() -> std::optional<Mismatch> {
        Rational ratio = zoo::phi_derivative_ratio_oracle(n, k);
        std::vector<Rational> vs;
        for (unsigned j = 1; j <= k; ++j)
            vs.push_back(zoo::varsigma(j, n));
        if (opts.tamper && opts.tamper->input >= 1 && opts.tamper->input <= k)
            vs[opts.tamper->input - 1] += opts.tamper->delta;
        Rational trace_side = partitions::trace<Rational>(k, partitions::weight_function("phi_Phi"), vs);
        std::vector<Rational> log_derivs;
        for (unsigned j = 1; j <= k; ++j)
            log_derivs.push_back(-Rational(factorial(j - 1)) * vs[j - 1]);
        Rational bell_side = bell::bell_via_trace<Rational>(k, log_derivs);
        if (ratio != trace_side)
            return Mismatch{k, ratio, trace_side, "ratio vs trace(phi_Phi)"};
        if (ratio != bell_side)
            return Mismatch{k, ratio, bell_side, "ratio vs bell"};
        return std::nullopt;
    });
}

VerificationReport verify_ramanujan(std::size_t order, const Options& opts)
{
    require(order >= 2, "ramanujan needs order >= 2");
    return run("ramanujan", {}, order, [&] {
        auto E = tampered(build_inputs(3, [order](unsigned j) { return zoo::eisenstein(j, order); }), opts);
        const QSeries E2 = zoo::eisenstein(1, order);
        const QSeries E4 = zoo::eisenstein(2, order);
        const QSeries E6 = zoo::eisenstein(3, order);
        std::optional<Mismatch> best;
        auto check = [&](const std::string& name, const QSeries& lhs, const QSeries& rhs) {
            auto m = compare_sides({{"theta " + name, lhs}, {"ramanujan " + name, rhs}});
            if (m && (!best || m->n < best->n))
                best = m;
        };
        check("E2", theta_op(E2), (E[0] * E[0] - E[1]) * Rational(1, 12));
        check("E4", theta_op(E4), (E[0] * E[1] - E[2]) * Rational(1, 3));
        check("E6", theta_op(E6), (E[0] * E[2] - E[1] * E[1]) * Rational(1, 2));
        return best;
    });
}

const std::vector<std::string>& theorem_ids()
{
    static const std::vector<std::string> ids{"v-even", "v-general", "u",      "macmahon",
                                              "a-ktr",  "srp",       "lehmer", "ramanujan"};
    return ids;
}

namespace {

unsigned param_uint(const Task& task, const std::string& key)
{
    auto it = task.params.find(key);
    if (it == task.params.end())
        throw std::invalid_argument(task.theorem + " needs parameter " + key);
    const Rational& v = it->second;
    if (!v.is_integer() || v.sign() < 0 || v > Rational(1000000))
        throw std::invalid_argument("parameter " + key + " must be a nonnegative integer");
    return static_cast<unsigned>(v.num().get_ui());
}

Rational param_rational(const Task& task, const std::string& key)
{
    auto it = task.params.find(key);
    if (it == task.params.end())
        throw std::invalid_argument(task.theorem + " needs parameter " + key);
    return it->second;
}

} // namespace

VerificationReport run_task(const Task& task)
{
    const auto& id = task.theorem;
    const auto& o = task.options;
    if (id == "v-even")
        return verify_v_even(param_uint(task, "k"), task.order, o);
    if (id == "v-general")
        return verify_v_general(param_uint(task, "k"), task.order, o);
    if (id == "u")
        return verify_u(param_uint(task, "k"), task.order, o);
    if (id == "macmahon")
        return verify_macmahon(param_uint(task, "k"), task.order, o);
    if (id == "a-ktr")
        return verify_a_ktr(param_uint(task, "k"), param_uint(task, "t"), param_uint(task, "r"),
                            param_rational(task, "a"), task.order, o);
    if (id == "srp")
        return verify_srp(param_uint(task, "k"), task.order, o);
    if (id == "lehmer")
        return verify_lehmer(param_uint(task, "n"), param_uint(task, "k"), o);
    if (id == "ramanujan")
        return verify_ramanujan(task.order, o);
    throw std::invalid_argument("unknown theorem '" + id + "'");
}

std::vector<Task> default_grid(const GridConfig& config)
{
    auto wanted = [&](const std::string& id) {
        return config.only.empty() || std::find(config.only.begin(), config.only.end(), id) != config.only.end();
    };
    auto order = [&](std::size_t fallback) { return config.order.value_or(fallback); };
    auto kmax = [&](unsigned fallback) { return config.k_max.value_or(fallback); };

    std::vector<Task> tasks;
    auto single_k = [&](const std::string& id, unsigned k_default, std::size_t n_default) {
        if (!wanted(id))
            return;
        for (unsigned k = 1; k <= kmax(k_default); ++k)
            tasks.push_back({id, {{"k", Rational(k)}}, order(n_default), {}});
    };
    single_k("v-even", 6, 60);
    single_k("v-general", 8, 60);
    single_k("u", 5, 60);
    single_k("macmahon", 5, 50);
    if (wanted("a-ktr"))
        for (unsigned k = 1; k <= kmax(3); ++k)
            for (unsigned t = 1; t <= config.t_max.value_or(3); ++t)
                for (unsigned r = 1; r <= config.r_max.value_or(3); ++r)
                    for (long a = config.a_min.value_or(-2); a <= config.a_max.value_or(2); ++a)
                        tasks.push_back({"a-ktr",
                                         {{"k", Rational(k)}, {"t", Rational(t)}, {"r", Rational(r)}, {"a", Rational(a)}},
                                         order(40),
                                         {}});
    single_k("srp", 4, 35);
    if (wanted("lehmer"))
        for (unsigned n = 2; n <= config.n_max.value_or(30); ++n)
            for (unsigned k = 1; k <= kmax(5); ++k)
                tasks.push_back({"lehmer", {{"n", Rational(n)}, {"k", Rational(k)}}, k, {}});
    if (wanted("ramanujan"))
        tasks.push_back({"ramanujan", {}, order(200), {}});
    return tasks;
}

bool report_less(const VerificationReport& a, const VerificationReport& b)
{
    if (a.theorem_id != b.theorem_id)
        return a.theorem_id < b.theorem_id;
    return a.parameters < b.parameters;
}

std::vector<VerificationReport> verify_all(const std::vector<Task>& tasks, unsigned jobs)
{
    std::vector<VerificationReport> reports(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                reports[i] = run_task(tasks[i]);
            } catch (const std::exception& e) {
                reports[i] = VerificationReport{};
                reports[i].theorem_id = tasks[i].theorem;
                reports[i].parameters = tasks[i].params;
                reports[i].order = tasks[i].order;
                reports[i].status = Status::error;
                reports[i].message = e.what();
            }
        }
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    std::stable_sort(reports.begin(), reports.end(), report_less);
    return reports;
}

} // namespace qtrace::verify
