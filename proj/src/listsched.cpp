#include "msp/listsched.hpp"

#include <algorithm>

#include "msp/errors.hpp"

namespace msp {

PriorityRule parse_rule(const std::string& name) {
    if (name == "hlfet") return PriorityRule::hlfet;
    if (name == "mts") return PriorityRule::mts;
    if (name == "lft") return PriorityRule::lft;
    throw ParseError("unknown priority rule '" + name + "' (expected hlfet, lft, or mts)");
}

std::string rule_name(PriorityRule rule) {
    switch (rule) {
        case PriorityRule::hlfet: return "hlfet";
        case PriorityRule::mts: return "mts";
        case PriorityRule::lft: return "lft";
    }
    return "?";
}

namespace {

std::vector<int> transitive_successor_counts(const TaskGraph& g) {
    int n = g.vertex_count();
    std::vector<int> count(n + 1, 0);
    std::vector<char> seen(n + 1);
    std::vector<int> stack;
    for (int u = 1; u <= n; ++u) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(g.successors(u).begin(), g.successors(u).end());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (seen[v]) continue;
            seen[v] = 1;
            ++count[u];
            for (int w : g.successors(v))
                if (!seen[w]) stack.push_back(w);
        }
    }
    return count;
}

} // namespace

std::vector<int> priority_keys(const TaskGraph& g, PriorityRule rule) {
    int n = g.vertex_count();
    std::vector<int> keys(n + 1, 0);
    switch (rule) {
        case PriorityRule::hlfet: {
            keys = hlfet_levels(g).level;
            break;
        }
        case PriorityRule::mts: {
            keys = transitive_successor_counts(g);
            break;
        }
        case PriorityRule::lft: {
            // Latest finish so the heaviest downstream path still meets the
            // critical-path horizon: t_cp - (level(v) - c(v)). Negated so a
            // tighter deadline means a higher key.
            LevelTable t = hlfet_levels(g);
            int t_cp = critical_path_length(g);
            for (int v = 1; v <= n; ++v)
                keys[v] = -(t_cp - t.level[v] + g.weight(v));
            break;
        }
    }
    return keys;
}

Schedule list_schedule(const TaskGraph& g, int machines, PriorityRule rule) {
    std::vector<int> keys = priority_keys(g, rule);
    PartialSolution x = empty_solution(g, machines);
    while (!x.complete()) {
        std::vector<int> ready = ready_set(g, x);
        int pick = ready.front();
        for (int v : ready)
            if (keys[v] > keys[pick]) pick = v;  // ready is id-ascending, so ties keep the lowest id
        x = extend(g, x, pick);
    }
    return {x, makespan(g, x)};
}

} // namespace msp
