#include "msp/bnb.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <utility>

#include "msp/errors.hpp"

namespace msp {

std::string status_name(SolveStatus s) {
    return s == SolveStatus::optimal ? "Optimal" : "TimedOut";
}

namespace {

struct Node {
    PartialSolution partial;
    int lb = 0;
};

} // namespace

SolveResult solve(const TaskGraph& g, int machines, BoundKind bound, PriorityRule rule,
                  const SolveLimits& limits) {
    using clock = std::chrono::steady_clock;
    const auto started = clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - started)
            .count();
    };

    SearchStats stats;
    std::vector<int> keys = priority_keys(g, rule);

    PartialSolution root = empty_solution(g, machines);
    BoundEval root_eval = evaluate_bound(bound, g, root, machines);
    stats.lb_root = root_eval.value;
    stats.work_units += root_eval.sweeps;

    std::vector<Node> stack;
    stack.push_back({std::move(root), root_eval.value});

    std::optional<PartialSolution> best;
    int incumbent = 0;

    const bool use_time = limits.time_limit_seconds > 0;
    const long long time_budget_ms =
        use_time ? static_cast<long long>(limits.time_limit_seconds * 1000.0) : 0;
    auto out_of_budget = [&] {
        if (!best) return false;  // never stop before a full schedule exists
        if (limits.work_budget > 0 && stats.work_units >= limits.work_budget) return true;
        return use_time && elapsed_ms() >= time_budget_ms;
    };

    std::vector<int> order;
    std::vector<Node> children;
    while (!stack.empty()) {
        if (out_of_budget()) {
            stats.status = SolveStatus::timed_out;
            break;
        }
        Node node = std::move(stack.back());
        stack.pop_back();
        stats.work_units += 1;

        if (best && bound != BoundKind::none && node.lb >= incumbent) {
            ++stats.nodes_pruned;
            continue;
        }
        ++stats.nodes_expanded;

        order = ready_set(g, node.partial);  // id-ascending
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return keys[a] > keys[b]; });

        children.clear();
        for (int v : order) {
            PartialSolution child = extend(g, node.partial, v);
            if (child.complete()) {
                int mk = makespan(g, child);
                if (!best || mk < incumbent) {
                    incumbent = mk;
                    best = std::move(child);
                    stats.incumbent_history.push_back({mk, elapsed_ms()});
                }
                continue;
            }
            if (bound != BoundKind::none) {
                BoundEval eval = evaluate_bound(bound, g, child, machines);
                stats.work_units += eval.sweeps;
                if (best && eval.value >= incumbent) {
                    ++stats.nodes_pruned;
                    continue;
                }
                children.push_back({std::move(child), eval.value});
            } else {
                children.push_back({std::move(child), 0});
            }
        }
        // Reverse so the highest-priority child sits on top of the stack.
        for (auto it = children.rbegin(); it != children.rend(); ++it)
            stack.push_back(std::move(*it));
    }

    stats.elapsed_ms = elapsed_ms();

    SolveResult result;
    result.best = {*best, incumbent};
    result.stats = std::move(stats);
    return result;
}

int brute_force_opt(const TaskGraph& g, int machines, int max_core) {
    if (g.core_count() > max_core)
        throw TooLarge("exhaustive enumeration capped at " + std::to_string(max_core) +
                       " tasks, got " + std::to_string(g.core_count()));

    int best = -1;
    std::vector<PartialSolution> stack;
    stack.push_back(empty_solution(g, machines));
    while (!stack.empty()) {
        PartialSolution x = std::move(stack.back());
        stack.pop_back();
        if (x.complete()) {
            int mk = makespan(g, x);
            if (best < 0 || mk < best) best = mk;
            continue;
        }
        for (int v : ready_set(g, x)) stack.push_back(extend(g, x, v));
    }
    return best;
}

} // namespace msp
