#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "msp/bnb.hpp"
#include "msp/errors.hpp"
#include "oracles.hpp"

using namespace msp;

TEST_CASE("solve on the fixtures") {
    TaskGraph g = fixtures::diamond();

    SolveResult r = solve(g, 2, BoundKind::fernandez, PriorityRule::hlfet);
    CHECK(r.best.makespan == 5);
    CHECK(r.stats.status == SolveStatus::optimal);
    CHECK(check_feasible(g, r.best.solution));

    r = solve(g, 1, BoundKind::fujita, PriorityRule::hlfet);
    CHECK(r.best.makespan == 7);
    CHECK(r.stats.lb_root == 7);  // root bound is already tight
    CHECK(r.stats.incumbent_history.size() == 1);

    TaskGraph c = fixtures::chain3();
    for (BoundKind b : {BoundKind::none, BoundKind::fernandez, BoundKind::fujita}) {
        r = solve(c, 3, b, PriorityRule::hlfet);
        CHECK(r.best.makespan == 6);
        CHECK(r.stats.status == SolveStatus::optimal);
    }
}

TEST_CASE("exhaustive search reports the trivial root bound") {
    TaskGraph g = fixtures::diamond();
    SolveResult r = solve(g, 2, BoundKind::none, PriorityRule::hlfet);
    CHECK(r.best.makespan == 5);
    CHECK(r.stats.lb_root == 5);  // critical path
    CHECK(r.stats.nodes_pruned == 0);
}

TEST_CASE("brute force oracle operation") {
    CHECK(brute_force_opt(fixtures::diamond(), 2) == 5);
    CHECK(brute_force_opt(fixtures::diamond(), 1) == 7);
    CHECK(brute_force_opt(fixtures::parallel4(), 3) == 2);
    CHECK(brute_force_opt(normalize(fixtures::parallel4()), 4) == 1);

    TaskGraph big = oracle::random_dag(7, 9, 0.3, 1, 9);
    CHECK_THROWS_AS(brute_force_opt(big, 2), TooLarge);
    CHECK(brute_force_opt(big, 2, 9) >= critical_path_length(big));
}

TEST_CASE("every bound finds the exhaustive optimum") {
    for (std::uint64_t seed = 500; seed < 515; ++seed) {
        TaskGraph g = normalize(oracle::random_dag(seed, 5 + static_cast<int>(seed % 3), 0.3, 1, 9));
        for (int m = 1; m <= 3; ++m) {
            int opt = oracle::opt_makespan(g, m);
            for (BoundKind b : {BoundKind::none, BoundKind::fernandez, BoundKind::fujita}) {
                SolveResult r = solve(g, m, b, PriorityRule::hlfet);
                CAPTURE(seed);
                CAPTURE(m);
                CAPTURE(bound_name(b));
                CHECK(r.stats.status == SolveStatus::optimal);
                CHECK(r.best.makespan == opt);
                CHECK(r.best.makespan == brute_force_opt(g, m));
                CHECK(r.stats.lb_root <= opt);
            }
        }
    }
}

TEST_CASE("first incumbent is the list schedule of the expansion rule") {
    for (std::uint64_t seed = 530; seed < 540; ++seed) {
        TaskGraph g = normalize(oracle::random_dag(seed, 7, 0.25, 1, 9));
        for (int m : {1, 2, 3})
            for (PriorityRule rule :
                 {PriorityRule::hlfet, PriorityRule::lft, PriorityRule::mts}) {
                SolveResult r = solve(g, m, BoundKind::fujita, rule);
                CAPTURE(seed);
                CAPTURE(m);
                CHECK(r.stats.incumbent_history.front().makespan ==
                      list_schedule(g, m, rule).makespan);
            }
    }
}

TEST_CASE("incumbent history strictly improves") {
    for (std::uint64_t seed = 550; seed < 560; ++seed) {
        TaskGraph g = normalize(oracle::random_dag(seed, 8, 0.2, 1, 9));
        SolveResult r = solve(g, 2, BoundKind::fernandez, PriorityRule::hlfet);
        const auto& h = r.stats.incumbent_history;
        REQUIRE(!h.empty());
        for (size_t i = 1; i < h.size(); ++i) CHECK(h[i].makespan < h[i - 1].makespan);
        CHECK(h.back().makespan == r.best.makespan);
    }
}

TEST_CASE("stronger bounds never expand more nodes") {
    for (std::uint64_t seed = 570; seed < 585; ++seed) {
        TaskGraph g = normalize(oracle::random_dag(seed, 7 + static_cast<int>(seed % 2), 0.25, 1, 9));
        for (int m : {2, 3}) {
            SolveResult none = solve(g, m, BoundKind::none, PriorityRule::hlfet);
            SolveResult fe = solve(g, m, BoundKind::fernandez, PriorityRule::hlfet);
            SolveResult fu = solve(g, m, BoundKind::fujita, PriorityRule::hlfet);
            CAPTURE(seed);
            CAPTURE(m);
            REQUIRE(none.stats.status == SolveStatus::optimal);
            REQUIRE(fe.stats.status == SolveStatus::optimal);
            REQUIRE(fu.stats.status == SolveStatus::optimal);
            CHECK(fu.stats.nodes_expanded <= fe.stats.nodes_expanded);
            CHECK(fe.stats.nodes_expanded <= none.stats.nodes_expanded);
            CHECK(fu.best.makespan == none.best.makespan);
            CHECK(fe.best.makespan == none.best.makespan);
        }
    }
}

TEST_CASE("work budget stops the search but keeps a feasible result") {
    TaskGraph g = normalize(oracle::random_dag(99, 16, 0.12, 1, 9));
    SolveLimits limits;
    limits.time_limit_seconds = 0;
    limits.work_budget = 40;  // a few node pops at most
    SolveResult r = solve(g, 2, BoundKind::none, PriorityRule::hlfet, limits);
    CHECK(r.stats.status == SolveStatus::timed_out);
    CHECK(check_feasible(g, r.best.solution));
    CHECK(r.best.solution.complete());
    // The first incumbent is the list schedule; later ones only improve on it.
    CHECK(r.best.makespan <= list_schedule(g, 2, PriorityRule::hlfet).makespan);
}

TEST_CASE("identical calls give identical searches") {
    TaskGraph g = normalize(oracle::random_dag(123, 9, 0.25, 1, 9));
    SolveResult a = solve(g, 2, BoundKind::fujita, PriorityRule::hlfet);
    SolveResult b = solve(g, 2, BoundKind::fujita, PriorityRule::hlfet);
    CHECK(a.best.solution == b.best.solution);
    CHECK(a.stats.nodes_expanded == b.stats.nodes_expanded);
    CHECK(a.stats.nodes_pruned == b.stats.nodes_pruned);
    CHECK(a.stats.work_units == b.stats.work_units);
    CHECK(a.stats.lb_root == b.stats.lb_root);
}
