#include "msp/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "msp/bnb.hpp"
#include "msp/randgen.hpp"

namespace msp {

// Full event-grid sweeps per second of allotted time, measured once on the
// reference build box (Release, single core). Only a scale factor between
// the --time-limit knob and the deterministic budget; exactness does not
// matter, reproducibility does.
const long long kWorkUnitsPerSecond = 100000;

long long work_budget_for(double seconds) {
    double units = seconds * static_cast<double>(kWorkUnitsPerSecond);
    return std::max(1LL, static_cast<long long>(units));
}

std::uint64_t instance_seed(std::uint64_t base, int size, int index) {
    std::uint64_t state =
        base ^ (static_cast<std::uint64_t>(size) << 32) ^ static_cast<std::uint64_t>(index);
    return split_mix64(state);
}

BenchPlan default_plan() {
    BenchPlan plan;
    for (int n = 12; n <= 22; ++n) plan.sizes.push_back(n);
    plan.machine_counts = {2, 4, 8};
    plan.per_size = 10;
    plan.time_limit_seconds = 60.0;
    plan.bounds = {BoundKind::fernandez, BoundKind::fujita};
    return plan;
}

BenchPlan paper_scale_plan() {
    BenchPlan plan;
    for (int n = 100; n <= 150; n += 5) plan.sizes.push_back(n);
    plan.machine_counts = {24, 28, 32, 36, 40};
    plan.per_size = 16;
    plan.time_limit_seconds = 60.0;
    plan.bounds = {BoundKind::fernandez, BoundKind::fujita};
    return plan;
}

BenchResult run_bench(const BenchPlan& plan, std::ostream* progress) {
    SolveLimits limits;
    limits.time_limit_seconds = 0;  // metered by work budget for reproducibility
    limits.work_budget = work_budget_for(plan.time_limit_seconds);

    BenchResult result;
    for (int size : plan.sizes) {
        for (int index = 0; index < plan.per_size; ++index) {
            std::uint64_t seed = instance_seed(plan.base_seed, size, index);
            GenSpec spec;
            spec.n = size;
            spec.target_os = plan.order_strength;
            spec.seed = seed;
            GenResult gen = generate(spec);

            for (int m : plan.machine_counts) {
                for (BoundKind bound : plan.bounds) {
                    SolveResult sol = solve(gen.graph, m, bound, plan.rule, limits);

                    BenchRow row;
                    row.instance = "n" + std::to_string(size) + "_i" + std::to_string(index);
                    row.n = size;
                    row.m = m;
                    row.bound = bound_name(bound);
                    row.priority = rule_name(plan.rule);
                    row.status = status_name(sol.stats.status);
                    row.makespan = sol.best.makespan;
                    row.lb_root = sol.stats.lb_root;
                    row.nodes_expanded = sol.stats.nodes_expanded;
                    row.nodes_pruned = sol.stats.nodes_pruned;
                    row.time_ms = sol.stats.elapsed_ms;
                    row.seed = seed;
                    if (progress)
                        (*progress) << row.instance << " m=" << m << ' ' << row.bound << ": "
                                    << row.status << " makespan=" << row.makespan << " in "
                                    << row.time_ms << " ms\n";
                    result.rows.push_back(std::move(row));
                }
            }
        }
    }
    result.summary = summarize(result.rows);
    return result;
}

std::string summarize(const std::vector<BenchRow>& rows) {
    // (size, m, bound) -> (total, optimal, total completed time)
    std::map<std::tuple<int, int, std::string>, std::tuple<int, int, long long>> cells;
    for (const BenchRow& r : rows) {
        auto& [total, optimal, time] = cells[{r.n, r.m, r.bound}];
        ++total;
        if (r.status == "Optimal") {
            ++optimal;
            time += r.time_ms;
        }
    }

    std::ostringstream out;
    out << std::left << std::setw(6) << "n" << std::setw(4) << "m" << std::setw(11) << "bound"
        << std::setw(10) << "optimal" << std::setw(9) << "percent" << "mean_ms(completed)\n";
    for (const auto& [key, val] : cells) {
        const auto& [size, m, bound] = key;
        const auto& [total, optimal, time] = val;
        out << std::left << std::setw(6) << size << std::setw(4) << m << std::setw(11) << bound
            << std::setw(10) << (std::to_string(optimal) + "/" + std::to_string(total))
            << std::setw(9) << std::fixed << std::setprecision(1)
            << (total ? 100.0 * optimal / total : 0.0);
        if (optimal > 0)
            out << std::fixed << std::setprecision(1)
                << static_cast<double>(time) / static_cast<double>(optimal);
        else
            out << "-";
        out << '\n';
    }
    return out.str();
}

} // namespace msp
