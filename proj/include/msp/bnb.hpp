#pragma once

#include <string>
#include <vector>

#include "msp/bounds.hpp"
#include "msp/graph.hpp"
#include "msp/listsched.hpp"
#include "msp/schedule.hpp"

namespace msp {

enum class SolveStatus { optimal, timed_out };

std::string status_name(SolveStatus s);  // "Optimal" / "TimedOut"

/// A makespan improvement found during the search and when it appeared.
struct IncumbentRecord {
    int makespan = 0;
    long long elapsed_ms = 0;
};

struct SearchStats {
    long long nodes_expanded = 0;        // nodes popped and branched
    long long nodes_pruned = 0;          // subtrees cut by the lower bound
    std::vector<IncumbentRecord> incumbent_history;  // strictly decreasing makespans
    SolveStatus status = SolveStatus::optimal;
    long long elapsed_ms = 0;
    int lb_root = 0;
    long long work_units = 0;            // grid sweeps + node pops; deterministic
};

struct SolveResult {
    Schedule best;
    SearchStats stats;
};

/// When to give up. Both limits may be active at once; whichever trips first
/// sets status TimedOut. Limits are only consulted between node expansions
/// and never before a first full schedule exists, so the result always holds
/// a feasible schedule.
struct SolveLimits {
    double time_limit_seconds = 60.0;  // wall clock; <= 0 disables
    long long work_budget = 0;         // work_units cap; <= 0 disables
};

/// Depth-first branch and bound over permutation prefixes. Children of a node
/// are its ready-set vertices, explored highest priority key first (ties:
/// lowest id); each child's bound is evaluated before pushing and a subtree
/// is cut when bound >= incumbent. With BoundKind::none nothing is cut:
/// exhaustive enumeration. The first complete schedule the DFS reaches is
/// exactly the list schedule for the same rule.
SolveResult solve(const TaskGraph& g, int machines, BoundKind bound, PriorityRule rule,
                  const SolveLimits& limits = {});

/// Minimum makespan by enumerating every precedence-valid permutation and
/// decoding greedily. Throws TooLarge when the graph has more than max_core
/// non-normalization vertices.
int brute_force_opt(const TaskGraph& g, int machines, int max_core = 8);

} // namespace msp
