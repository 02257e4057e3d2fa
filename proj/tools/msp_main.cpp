#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "msp/bench.hpp"
#include "msp/bnb.hpp"
#include "msp/bounds.hpp"
#include "msp/errors.hpp"
#include "msp/formats.hpp"
#include "msp/graph.hpp"
#include "msp/listsched.hpp"
#include "msp/randgen.hpp"

namespace {

// "12:22" (inclusive range) or "12,14,16".
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    size_t colon = text.find(':');
    if (colon != std::string::npos) {
        int lo = std::stoi(text.substr(0, colon));
        int hi = std::stoi(text.substr(colon + 1));
        if (lo > hi) throw msp::ParseError("empty range '" + text + "'");
        for (int v = lo; v <= hi; ++v) values.push_back(v);
        return values;
    }
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        values.push_back(std::stoi(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (values.empty()) throw msp::ParseError("empty list '" + text + "'");
    return values;
}

std::vector<msp::BoundKind> parse_bound_list(const std::string& text) {
    std::vector<msp::BoundKind> bounds;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        bounds.push_back(msp::parse_bound(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (bounds.empty()) throw msp::ParseError("empty bound list");
    return bounds;
}

int cmd_generate(const msp::GenSpec& spec, const std::string& out_path) {
    msp::GenResult gen = msp::generate(spec);
    std::string text = msp::write_dag(msp::core_graph(gen.graph));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw msp::ParseError("cannot write '" + out_path + "'");
        out << text;
    }
    std::cerr << "order strength " << std::fixed << std::setprecision(3) << gen.achieved_os
              << " (target " << spec.target_os << ")";
    if (!gen.os_met) std::cerr << " -- outside tolerance, closest achievable returned";
    std::cerr << '\n';
    return 0;
}

int cmd_solve(const std::string& path, int machines, const std::string& bound,
              const std::string& rule, double time_limit) {
    msp::TaskGraph g = msp::normalize(msp::load_dag(path));
    msp::SolveLimits limits;
    limits.time_limit_seconds = time_limit;
    msp::SolveResult r =
        msp::solve(g, machines, msp::parse_bound(bound), msp::parse_rule(rule), limits);
    std::cout << "makespan " << r.best.makespan << '\n'
              << "status " << msp::status_name(r.stats.status) << '\n'
              << "lb_root " << r.stats.lb_root << '\n'
              << "nodes_expanded " << r.stats.nodes_expanded << '\n'
              << "nodes_pruned " << r.stats.nodes_pruned << '\n'
              << "time_ms " << r.stats.elapsed_ms << '\n';
    return 0;
}

int cmd_validate(const std::string& path) {
    msp::TaskGraph g = msp::load_dag(path);
    msp::TaskGraph norm = msp::normalize(g);
    if (!(msp::normalize(norm) == norm)) throw msp::Error("normalization is not idempotent");
    std::cout << "n=" << g.vertex_count() << " t_cp=" << msp::critical_path_length(norm)
              << " OS=" << std::fixed << std::setprecision(3) << msp::order_strength(g)
              << " OK\n";
    return 0;
}

int cmd_bench(const msp::BenchPlan& plan, const std::string& csv_path) {
    msp::BenchResult result = msp::run_bench(plan, &std::cerr);
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw msp::ParseError("cannot write '" + csv_path + "'");
    out << msp::csv_header() << '\n';
    for (const msp::BenchRow& row : result.rows) out << msp::csv_line(row) << '\n';
    std::cout << result.summary;
    std::cout << "wrote " << result.rows.size() << " rows to " << csv_path << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and heuristic scheduling of weighted task DAGs on identical machines"};
    app.require_subcommand(1);

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "Generate a random instance");
    msp::GenSpec spec;
    std::string gen_out;
    gen_cmd->add_option("--n", spec.n, "Task count")->required();
    gen_cmd->add_option("--order-strength", spec.target_os, "Target order strength in (0,1)");
    gen_cmd->add_option("--tol", spec.os_tolerance, "Order-strength tolerance");
    gen_cmd->add_option("--min-weight", spec.min_weight, "Smallest task weight");
    gen_cmd->add_option("--max-weight", spec.max_weight, "Largest task weight");
    gen_cmd->add_option("--seed", spec.seed, "Generator seed");
    gen_cmd->add_option("--out", gen_out, "Output file (stdout when omitted)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Branch-and-bound solve of one instance");
    std::string solve_path, solve_bound = "fujita", solve_rule = "hlfet";
    int solve_machines = 0;
    double solve_limit = 60.0;
    solve_cmd->add_option("file", solve_path, "Instance file")->required();
    solve_cmd->add_option("--machines", solve_machines, "Machine count")->required();
    solve_cmd->add_option("--bound", solve_bound, "fernandez | fujita | none");
    solve_cmd->add_option("--priority", solve_rule, "hlfet | lft | mts");
    solve_cmd->add_option("--time-limit", solve_limit, "Seconds before giving up");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Sweep generated instances, write CSV");
    std::string bench_sizes, bench_machines, bench_bounds, bench_csv = "bench.csv";
    int bench_per_size = 0;
    double bench_limit = 0, bench_os = 0;
    std::uint64_t bench_seed = 0;
    bool paper_scale = false;
    bench_cmd->add_option("--sizes", bench_sizes, "Sizes, e.g. 12:22 or 12,16,20");
    bench_cmd->add_option("--machines", bench_machines, "Machine counts, e.g. 2,4,8");
    bench_cmd->add_option("--per-size", bench_per_size, "Instances per size");
    bench_cmd->add_option("--time-limit", bench_limit, "Seconds per solve");
    bench_cmd->add_option("--bounds", bench_bounds, "Bounds, e.g. fernandez,fujita");
    bench_cmd->add_option("--order-strength", bench_os, "Target order strength");
    bench_cmd->add_option("--seed", bench_seed, "Base seed for instance derivation");
    bench_cmd->add_option("--csv", bench_csv, "Output CSV path");
    bench_cmd->add_flag("--paper-scale", paper_scale,
                        "Full-scale sweep (sizes 100:150 step 5, m 24..40)");

    // validate
    auto* val_cmd = app.add_subcommand("validate", "Check an instance file");
    std::string val_path;
    val_cmd->add_option("file", val_path, "Instance file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen_cmd) return cmd_generate(spec, gen_out);
        if (*solve_cmd)
            return cmd_solve(solve_path, solve_machines, solve_bound, solve_rule, solve_limit);
        if (*val_cmd) return cmd_validate(val_path);
        if (*bench_cmd) {
            msp::BenchPlan plan = paper_scale ? msp::paper_scale_plan() : msp::default_plan();
            if (!bench_sizes.empty()) plan.sizes = parse_int_list(bench_sizes);
            if (!bench_machines.empty()) plan.machine_counts = parse_int_list(bench_machines);
            if (bench_per_size > 0) plan.per_size = bench_per_size;
            if (bench_limit > 0) plan.time_limit_seconds = bench_limit;
            if (!bench_bounds.empty()) plan.bounds = parse_bound_list(bench_bounds);
            if (bench_os > 0) plan.order_strength = bench_os;
            if (bench_cmd->count("--seed")) plan.base_seed = bench_seed;
            return cmd_bench(plan, bench_csv);
        }
    } catch (const msp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
