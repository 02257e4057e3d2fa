#include "msp/schedule.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "msp/errors.hpp"

namespace msp {

PartialSolution empty_solution(const TaskGraph& g, int machines) {
    if (machines < 1)
        throw InvalidMachineCount("machine count must be at least 1, got " +
                                  std::to_string(machines));
    PartialSolution x;
    x.machines = machines;
    x.perm.reserve(g.vertex_count());
    x.placement.assign(g.vertex_count() + 1, {});
    x.machine_free.assign(machines + 1, 0);
    return x;
}

int finish_time(const TaskGraph& g, const PartialSolution& x, int v) {
    return x.placement[v].start + g.weight(v);
}

PartialSolution extend(const TaskGraph& g, const PartialSolution& x, int v) {
    if (v < 1 || v > g.vertex_count())
        throw PrecedenceError("vertex " + std::to_string(v) + " out of range");
    if (x.placed(v))
        throw DuplicateVertex("vertex " + std::to_string(v) + " already scheduled");

    int earliest = 0;
    for (int u : g.predecessors(v)) {
        if (!x.placed(u))
            throw PrecedenceError("vertex " + std::to_string(v) + " scheduled before its predecessor " +
                                  std::to_string(u));
        earliest = std::max(earliest, finish_time(g, x, u));
    }

    // Machine allowing the earliest start; ties go to the lowest machine id.
    int best = 1;
    int start = std::max(earliest, x.machine_free[1]);
    for (int k = 2; k <= x.machines; ++k) {
        int s = std::max(earliest, x.machine_free[k]);
        if (s < start) {
            start = s;
            best = k;
        }
    }

    PartialSolution r = x;
    r.perm.push_back(v);
    r.placement[v] = {best, start};
    r.machine_free[best] = start + g.weight(v);
    return r;
}

PartialSolution decode(const TaskGraph& g, const std::vector<int>& perm, int machines) {
    PartialSolution x = empty_solution(g, machines);
    for (int v : perm) x = extend(g, x, v);
    return x;
}

std::vector<int> ready_set(const TaskGraph& g, const PartialSolution& x) {
    std::vector<int> ready;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (x.placed(v)) continue;
        bool ok = true;
        for (int u : g.predecessors(v))
            if (!x.placed(u)) {
                ok = false;
                break;
            }
        if (ok) ready.push_back(v);
    }
    return ready;
}

bool check_feasible(const TaskGraph& g, const PartialSolution& x, std::string* diagnostic) {
    auto fail = [&](const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return false;
    };

    // Per-machine intervals must not overlap.
    std::map<int, std::vector<std::pair<int, int>>> by_machine;  // machine -> (start, end)
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (!x.placed(v)) continue;
        const Placement& p = x.placement[v];
        if (p.machine < 1 || p.machine > x.machines)
            return fail("vertex " + std::to_string(v) + " on invalid machine " +
                        std::to_string(p.machine));
        by_machine[p.machine].emplace_back(p.start, finish_time(g, x, v));
    }
    for (auto& [mach, iv] : by_machine) {
        std::sort(iv.begin(), iv.end());
        for (size_t i = 1; i < iv.size(); ++i)
            if (iv[i].first < iv[i - 1].second)
                return fail("overlap on machine " + std::to_string(mach) + " at time " +
                            std::to_string(iv[i].first));
    }

    // Every edge into a placed task must come from a task already finished.
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (!x.placed(v)) continue;
        for (int u : g.predecessors(v)) {
            if (!x.placed(u))
                return fail("vertex " + std::to_string(v) + " placed but its predecessor " +
                            std::to_string(u) + " is not");
            if (finish_time(g, x, u) > x.placement[v].start)
                return fail("vertex " + std::to_string(v) + " starts at " +
                            std::to_string(x.placement[v].start) + " before predecessor " +
                            std::to_string(u) + " finishes at " +
                            std::to_string(finish_time(g, x, u)));
        }
    }

    if (diagnostic) diagnostic->clear();
    return true;
}

int partial_makespan(const TaskGraph& g, const PartialSolution& x) {
    int best = 0;
    for (int v : x.perm) best = std::max(best, finish_time(g, x, v));
    return best;
}

int makespan(const TaskGraph& g, const PartialSolution& x) {
    if (!x.complete())
        throw IncompleteSchedule("makespan of a partial solution with " +
                                 std::to_string(x.scheduled()) + " of " +
                                 std::to_string(g.vertex_count()) + " tasks");
    return partial_makespan(g, x);
}

} // namespace msp
