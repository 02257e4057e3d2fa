#pragma once

#include <cstdint>
#include <string>

#include "msp/graph.hpp"

namespace msp {

/// Instance text format, one vertex per line after the count:
///
///   # optional comment lines
///   n
///   weight_1 out_degree_1 successor ids...
///   ...
///   weight_n out_degree_n successor ids...
///
/// All values are whitespace-separated decimal integers; ids are 1-based.
/// parse accepts comments and loose spacing; write emits the canonical form
/// (id order, single spaces, trailing newline, no comments), so
/// parse(write(g)) == g and write(parse(t)) is idempotent on canonical text.
TaskGraph parse_dag(const std::string& text);
std::string write_dag(const TaskGraph& g);

/// File wrappers. load_dag throws ParseError when the file cannot be read.
TaskGraph load_dag(const std::string& path);
void save_dag(const TaskGraph& g, const std::string& path);

/// One benchmark measurement; serializes to the CSV schema below.
struct BenchRow {
    std::string instance;
    int n = 0;
    int m = 0;
    std::string bound;
    std::string priority;
    std::string status;
    int makespan = 0;
    int lb_root = 0;
    long long nodes_expanded = 0;
    long long nodes_pruned = 0;
    long long time_ms = 0;
    std::uint64_t seed = 0;
};

/// "instance,n,m,bound,priority,status,makespan,lb_root,nodes_expanded,
/// nodes_pruned,time_ms,seed" — LF line endings, no quoting (no field ever
/// contains a comma).
std::string csv_header();
std::string csv_line(const BenchRow& row);

} // namespace msp
