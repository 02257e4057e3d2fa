#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "msp/errors.hpp"
#include "msp/listsched.hpp"
#include "oracles.hpp"

using namespace msp;

TEST_CASE("rule names parse and print") {
    CHECK(parse_rule("hlfet") == PriorityRule::hlfet);
    CHECK(parse_rule("lft") == PriorityRule::lft);
    CHECK(parse_rule("mts") == PriorityRule::mts);
    CHECK_THROWS_AS(parse_rule("fastest"), ParseError);
    CHECK(rule_name(PriorityRule::mts) == "mts");
}

TEST_CASE("priority keys on the diamond") {
    TaskGraph g = fixtures::diamond();

    std::vector<int> k = priority_keys(g, PriorityRule::hlfet);
    CHECK(k[1] == 5);
    CHECK(k[2] == 3);
    CHECK(k[3] == 4);
    CHECK(k[4] == 1);

    k = priority_keys(g, PriorityRule::mts);
    CHECK(k[1] == 3);
    CHECK(k[2] == 1);
    CHECK(k[3] == 1);
    CHECK(k[4] == 0);

    // Latest finish times against the critical-path horizon are 1, 4, 4, 5;
    // keys are their negations so tighter deadlines rank higher.
    k = priority_keys(g, PriorityRule::lft);
    CHECK(k[1] == -1);
    CHECK(k[2] == -4);
    CHECK(k[3] == -4);
    CHECK(k[4] == -5);
}

TEST_CASE("chain order is forced under every rule") {
    TaskGraph c = fixtures::chain3();
    for (PriorityRule rule : {PriorityRule::hlfet, PriorityRule::lft, PriorityRule::mts}) {
        Schedule s = list_schedule(c, 2, rule);
        CHECK(s.solution.perm == std::vector<int>{1, 2, 3});
        CHECK(s.makespan == 6);
    }
}

TEST_CASE("hlfet list schedules on the fixtures") {
    TaskGraph g = fixtures::diamond();

    Schedule s = list_schedule(g, 2, PriorityRule::hlfet);
    CHECK(s.solution.perm == std::vector<int>{1, 3, 2, 4});  // level 4 beats level 3
    CHECK(s.makespan == 5);

    CHECK(list_schedule(g, 1, PriorityRule::hlfet).makespan == 7);

    TaskGraph p = normalize(fixtures::parallel4());
    CHECK(list_schedule(p, 4, PriorityRule::hlfet).makespan == 1);
}

TEST_CASE("list schedules are feasible") {
    for (std::uint64_t seed = 200; seed < 220; ++seed) {
        TaskGraph g = normalize(oracle::random_dag(seed, 6 + static_cast<int>(seed % 4), 0.3, 1, 9));
        for (PriorityRule rule : {PriorityRule::hlfet, PriorityRule::lft, PriorityRule::mts}) {
            Schedule s = list_schedule(g, 2, rule);
            CAPTURE(seed);
            CHECK(check_feasible(g, s.solution));
            CHECK(s.solution.complete());
            CHECK(makespan(g, s.solution) == s.makespan);
        }
    }
}

TEST_CASE("single machine list schedules serialize with no idle time") {
    for (std::uint64_t seed = 230; seed < 240; ++seed) {
        TaskGraph g = normalize(oracle::random_dag(seed, 7, 0.25, 1, 9));
        for (PriorityRule rule : {PriorityRule::hlfet, PriorityRule::lft, PriorityRule::mts})
            CHECK(list_schedule(g, 1, rule).makespan == g.total_weight());
    }
}

TEST_CASE("list schedule stays within the guaranteed ratio of optimal") {
    for (std::uint64_t seed = 250; seed < 270; ++seed) {
        TaskGraph g = normalize(oracle::random_dag(seed, 5 + static_cast<int>(seed % 4), 0.3, 1, 9));
        for (int m = 1; m <= 3; ++m) {
            int opt = oracle::opt_makespan(g, m);
            for (PriorityRule rule : {PriorityRule::hlfet, PriorityRule::lft, PriorityRule::mts}) {
                Schedule s = list_schedule(g, m, rule);
                CAPTURE(seed);
                CAPTURE(m);
                // makespan <= (2 - 1/m) * opt, kept in integers
                CHECK(m * s.makespan <= (2 * m - 1) * opt);
                CHECK(s.makespan >= opt);
            }
        }
    }
}
