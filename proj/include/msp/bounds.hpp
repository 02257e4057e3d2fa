#pragma once

#include <string>
#include <vector>

#include "msp/graph.hpp"
#include "msp/schedule.hpp"

namespace msp {

/// Selects the lower bound used for pruning. none disables pruning entirely
/// (exhaustive search).
enum class BoundKind { none, fernandez, fujita };

BoundKind parse_bound(const std::string& name);   // throws ParseError
std::string bound_name(BoundKind kind);

/// Per-vertex time windows conditioned on a partial solution and a horizon T:
/// mn_end(u) is the earliest time u can finish, mx_start(u) the latest time u
/// can start so that everything downstream still finishes by T. Scheduled
/// tasks are pinned at their decoded times. events holds every distinct
/// mn_end/mx_start value, ascending.
struct BoundContext {
    int horizon = 0;
    std::vector<int> mn_end;    // 1-based; slot 0 unused
    std::vector<int> mx_start;  // 1-based; slot 0 unused
    std::vector<int> events;    // sorted ascending, deduplicated
};

/// Two topological passes: forward for mn_end (earliest completion through
/// predecessors), backward for mx_start (latest start against the horizon).
BoundContext build_context(const TaskGraph& g, const PartialSolution& x, int T);

/// Total work that must execute inside [t_i, t_j) no matter how the remaining
/// tasks are scheduled: sum over tasks forced to intersect the interval of
/// their minimum overlap min(mn_end - t_i, c, t_j - mx_start, t_j - t_i).
int min_density(const BoundContext& ctx, const TaskGraph& g, int t_i, int t_j);

/// Fewest machines that could possibly finish everything by T: the max of
/// ceil(density / length) over all interval endpoints drawn from the event
/// grid plus {0, T}.
int machines_lower(const TaskGraph& g, const PartialSolution& x, int T);

/// Smallest horizon the bounds reason against: the critical path, or the
/// latest pinned finish time when the partial solution already runs past it.
int base_horizon(const TaskGraph& g, const PartialSolution& x);

/// A bound value plus the number of full event-grid sweeps spent computing
/// it (one per probed horizon). The sweep count is the deterministic work
/// measure used by the benchmark harness.
struct BoundEval {
    int value = 0;
    int sweeps = 0;
};

/// Density argument at the base horizon T0: the makespan is at least
/// T0 + q where q = max over intervals of ceil(-len + density/m), clamped
/// at 0. One grid sweep.
BoundEval fernandez_eval(const TaskGraph& g, const PartialSolution& x, int m);

/// Largest horizon T with machines_lower(T) > m, plus one; found by doubling
/// then binary search, one sweep per probe. Never below fernandez_eval.
BoundEval fujita_eval(const TaskGraph& g, const PartialSolution& x, int m);

int fernandez_bound(const TaskGraph& g, const PartialSolution& x, int m);
int fujita_bound(const TaskGraph& g, const PartialSolution& x, int m);

/// Dispatch on kind; none yields the trivial horizon bound with zero sweeps.
BoundEval evaluate_bound(BoundKind kind, const TaskGraph& g, const PartialSolution& x, int m);

} // namespace msp
