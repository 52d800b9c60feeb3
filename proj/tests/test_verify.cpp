#include "doctest.h"

#include <algorithm>

#include "qtrace/verify.hpp"
#include "qtrace/zoo.hpp"

using namespace qtrace;
using namespace qtrace::verify;

TEST_SUITE("verify")
{
    TEST_CASE("every theorem verifies at small parameters")
    {
        CHECK(verify_v_even(2, 30).status == Status::verified);
        CHECK(verify_v_general(3, 30).status == Status::verified);
        CHECK(verify_v_general(4, 30).status == Status::verified);
        CHECK(verify_u(2, 30).status == Status::verified);
        CHECK(verify_macmahon(2, 30).status == Status::verified);
        CHECK(verify_a_ktr(2, 2, 1, Rational(1), 30).status == Status::verified);
        CHECK(verify_srp(2, 25).status == Status::verified);
        CHECK(verify_ramanujan(50).status == Status::verified);
        auto lehmer = verify_lehmer(12, 3);
        CHECK(lehmer.status == Status::verified);
        CHECK(lehmer.order == 3);
    }

    TEST_CASE("V_2 is E_2 and the U quotient starts 1 - 24q")
    {
        auto v2 = zoo::V_numerator(2, 60) / zoo::pentagonal_theta(60);
        CHECK(v2 == zoo::eisenstein(1, 60));
        auto u1 = zoo::U_numerator(1, 10) / zoo::U_denominator(10);
        CHECK(u1[1] == Rational(-24));
    }

    TEST_CASE("tampering with F_2 is reported as a mismatch")
    {
        Options opts;
        opts.tamper = Tamper{2, 5, Rational(1)};
        auto r = verify_v_even(2, 20, opts);
        CHECK(r.status == Status::mismatch);
        REQUIRE(r.first_mismatch.has_value());
        CHECK(r.first_mismatch->n == 5);
        CHECK(r.first_mismatch->lhs != r.first_mismatch->rhs);

        CHECK(verify_v_even(2, 20).status == Status::verified);
    }

    TEST_CASE("tampering reaches every theorem")
    {
        Options opts;
        opts.tamper = Tamper{1, 2, Rational(1, 7)};
        CHECK(verify_v_general(2, 15, opts).status == Status::mismatch);
        CHECK(verify_u(2, 15, opts).status == Status::mismatch);
        CHECK(verify_macmahon(2, 15, opts).status == Status::mismatch);
        CHECK(verify_a_ktr(2, 1, 1, Rational(0), 15, opts).status == Status::mismatch);
        CHECK(verify_srp(2, 15, opts).status == Status::mismatch);
        CHECK(verify_ramanujan(15, opts).status == Status::mismatch);
        Options lehmer_opts;
        lehmer_opts.tamper = Tamper{1, 0, Rational(1)};
        CHECK(verify_lehmer(7, 2, lehmer_opts).status == Status::mismatch);
    }

    TEST_CASE("preconditions")
    {
        CHECK_THROWS_AS(verify_v_even(0, 10), std::invalid_argument);
        CHECK_THROWS_AS(verify_lehmer(1, 2), std::invalid_argument);
        CHECK_THROWS_AS(run_task(Task{"nope", {}, 10, {}}), std::invalid_argument);
        CHECK_THROWS_AS(run_task(Task{"v-even", {}, 10, {}}), std::invalid_argument);
    }

    TEST_CASE("run_task dispatches by theorem id")
    {
        auto r = run_task(Task{"a-ktr", {{"k", 1}, {"t", 2}, {"r", 3}, {"a", -1}}, 20, {}});
        CHECK(r.theorem_id == "a-ktr");
        CHECK(r.status == Status::verified);
        CHECK(r.parameters.at("a") == Rational(-1));
        CHECK(r.order == 20);
    }

    TEST_CASE("grid construction")
    {
        CHECK(default_grid().size() == 309);
        GridConfig only;
        only.only = {"macmahon"};
        only.k_max = 5;
        only.order = 50;
        auto tasks = default_grid(only);
        CHECK(tasks.size() == 5);
        CHECK(std::all_of(tasks.begin(), tasks.end(), [](const Task& t) { return t.order == 50; }));
        GridConfig lehmer;
        lehmer.only = {"lehmer"};
        lehmer.n_max = 5;
        lehmer.k_max = 2;
        CHECK(default_grid(lehmer).size() == 8);
    }

    TEST_CASE("empty grid yields no reports")
    {
        CHECK(verify_all({}, 1).empty());
        CHECK(verify_all({}, 4).empty());
    }

    TEST_CASE("one poisoned task yields exactly one mismatch and sorted output")
    {
        GridConfig cfg;
        cfg.only = {"srp", "macmahon"};
        cfg.k_max = 3;
        cfg.order = 20;
        auto tasks = default_grid(cfg);
        std::reverse(tasks.begin(), tasks.end());
        tasks[1].options.tamper = Tamper{1, 4, Rational(1)};
        auto reports = verify_all(tasks, 3);
        REQUIRE(reports.size() == 6);
        auto bad = std::count_if(reports.begin(), reports.end(),
                                 [](const VerificationReport& r) { return r.status == Status::mismatch; });
        CHECK(bad == 1);
        CHECK(std::is_sorted(reports.begin(), reports.end(), report_less));
        CHECK(reports.front().theorem_id == "macmahon");
        CHECK(reports.front().parameters.at("k") == Rational(1));
        CHECK(reports.back().theorem_id == "srp");
    }

    TEST_CASE("parallel and serial runs agree")
    {
        GridConfig cfg;
        cfg.only = {"lehmer"};
        cfg.n_max = 10;
        cfg.k_max = 3;
        auto serial = verify_all(default_grid(cfg), 1);
        auto parallel = verify_all(default_grid(cfg), 4);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].parameters == parallel[i].parameters);
            CHECK(serial[i].status == parallel[i].status);
        }
    }
}
