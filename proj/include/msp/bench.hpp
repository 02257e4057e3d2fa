#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "msp/bounds.hpp"
#include "msp/formats.hpp"
#include "msp/listsched.hpp"

namespace msp {

/// A benchmark sweep: for every (size, instance index, machine count, bound)
/// cell, generate one DAG and solve it. Instance seeds derive from
/// (base_seed, size, index) only, so adding machine counts or bounds never
/// changes the instances.
struct BenchPlan {
    std::vector<int> sizes;
    std::vector<int> machine_counts;
    int per_size = 10;
    double time_limit_seconds = 60.0;
    std::vector<BoundKind> bounds;
    std::uint64_t base_seed = 1;
    double order_strength = 0.1;
    PriorityRule rule = PriorityRule::hlfet;
};

/// Desk-scale default sweep: sizes 12..22, 10 instances each, m in {2,4,8},
/// both bounds, OS 0.1.
BenchPlan default_plan();

/// The sweep behind the original experiment tables: sizes 100,105,...,150,
/// 16 instances each, m in {24,28,32,36,40}, 60 s per solve.
BenchPlan paper_scale_plan();

struct BenchResult {
    std::vector<BenchRow> rows;   // deterministic (size, index, m, bound) order
    std::string summary;          // per-(size,m,bound) completion table
};

/// Runs the plan. Solves are metered by a deterministic work budget
/// equivalent to time_limit_seconds (see work_budget_for), so reruns with
/// the same plan reproduce every column except time_ms. progress, when
/// non-null, receives one line per completed cell.
BenchResult run_bench(const BenchPlan& plan, std::ostream* progress = nullptr);

/// Seed for instance (size, index) under base_seed.
std::uint64_t instance_seed(std::uint64_t base, int size, int index);

/// Deterministic work units (bound-grid sweeps plus node pops) treated as
/// equivalent to the given wall-clock allowance.
long long work_budget_for(double seconds);

/// Calibration constant behind work_budget_for.
extern const long long kWorkUnitsPerSecond;

/// Renders the per-(size, m, bound) percent-completed / runtime table.
std::string summarize(const std::vector<BenchRow>& rows);

} // namespace msp
