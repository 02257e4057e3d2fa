#pragma once

#include <string>
#include <vector>

#include "msp/graph.hpp"

namespace msp {

/// Where one task landed: the machine that runs it and its start time.
/// start is -1 while the task is unscheduled.
struct Placement {
    int machine = 0;
    int start = -1;

    bool operator==(const Placement&) const = default;
};

/// A prefix of a schedule: the tasks placed so far, in placement order,
/// together with the per-machine frontier of end times.
///
/// The permutation prefix fully determines the placements via the greedy
/// decode rule (see extend), so two solutions with the same perm and machine
/// count are identical.
struct PartialSolution {
    int machines = 0;
    std::vector<int> perm;              // placement order, precedence-valid
    std::vector<Placement> placement;   // 1-based by vertex; slot 0 unused
    std::vector<int> machine_free;      // 1-based by machine; earliest idle time

    int scheduled() const { return static_cast<int>(perm.size()); }
    bool complete() const { return scheduled() + 1 == static_cast<int>(placement.size()); }
    bool placed(int v) const { return placement[v].start >= 0; }

    bool operator==(const PartialSolution&) const = default;
};

/// Fresh solution with nothing placed. Throws InvalidMachineCount if
/// machines < 1.
PartialSolution empty_solution(const TaskGraph& g, int machines);

/// start + weight of a placed task.
int finish_time(const TaskGraph& g, const PartialSolution& x, int v);

/// Place v next: it starts at max(latest predecessor finish, earliest
/// machine-free time) on the lowest-numbered machine that is free earliest.
/// Throws PrecedenceError if a predecessor of v is unplaced, DuplicateVertex
/// if v is already placed.
PartialSolution extend(const TaskGraph& g, const PartialSolution& x, int v);

/// Decode a full permutation into a schedule by repeated extend.
PartialSolution decode(const TaskGraph& g, const std::vector<int>& perm, int machines);

/// Tasks whose predecessors are all placed but which are not themselves
/// placed, ascending by id.
std::vector<int> ready_set(const TaskGraph& g, const PartialSolution& x);

/// Verify machine capacity (no overlap per machine) and precedence
/// (every edge (u,v) has finish(u) <= start(v)) over the placed tasks.
/// On failure returns false and, when diagnostic is non-null, explains why.
bool check_feasible(const TaskGraph& g, const PartialSolution& x,
                    std::string* diagnostic = nullptr);

/// Latest finish time over all placed tasks (0 if none placed).
int partial_makespan(const TaskGraph& g, const PartialSolution& x);

/// Makespan of a complete solution. Throws IncompleteSchedule otherwise.
int makespan(const TaskGraph& g, const PartialSolution& x);

/// A complete solution bundled with its makespan.
struct Schedule {
    PartialSolution solution;
    int makespan = 0;

    bool operator==(const Schedule&) const = default;
};

} // namespace msp
