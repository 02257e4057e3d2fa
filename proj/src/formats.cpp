#include "msp/formats.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "msp/errors.hpp"

namespace msp {

namespace {

// Pulls whitespace-separated integer tokens, remembering the line each came
// from so errors can point at it.
struct TokenStream {
    std::vector<std::pair<long long, int>> tokens;  // value, line number
    size_t pos = 0;

    explicit TokenStream(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            std::istringstream fields(line);
            std::string tok;
            while (fields >> tok) {
                if (tok[0] == '#') break;  // trailing comment
                try {
                    size_t used = 0;
                    long long value = std::stoll(tok, &used);
                    if (used != tok.size()) throw std::invalid_argument(tok);
                    tokens.emplace_back(value, line_no);
                } catch (const std::exception&) {
                    throw ParseError("line " + std::to_string(line_no) + ": '" + tok +
                                     "' is not an integer");
                }
            }
        }
    }

    bool done() const { return pos == tokens.size(); }

    long long next(const char* what) {
        if (done()) {
            int last = tokens.empty() ? 0 : tokens.back().second;
            throw ParseError("line " + std::to_string(last) + ": unexpected end of input, expected " +
                             std::string(what));
        }
        return tokens[pos++].first;
    }

    int line() const { return pos == 0 ? 0 : tokens[pos - 1].second; }
};

} // namespace

TaskGraph parse_dag(const std::string& text) {
    TokenStream ts(text);
    long long n = ts.next("vertex count");
    if (n < 1 || n > 1000000)
        throw ParseError("line " + std::to_string(ts.line()) + ": bad vertex count " +
                         std::to_string(n));

    std::vector<int> weights(n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n; ++v) {
        long long w = ts.next("task weight");
        if (w < 0 || w > 1000000000)
            throw ParseError("line " + std::to_string(ts.line()) + ": bad weight " +
                             std::to_string(w) + " for vertex " + std::to_string(v));
        weights[v - 1] = static_cast<int>(w);
        long long degree = ts.next("out-degree");
        if (degree < 0 || degree > n)
            throw ParseError("line " + std::to_string(ts.line()) + ": bad out-degree " +
                             std::to_string(degree) + " for vertex " + std::to_string(v));
        for (int k = 0; k < degree; ++k) {
            long long succ = ts.next("successor id");
            if (succ < 1 || succ > n)
                throw ParseError("line " + std::to_string(ts.line()) + ": successor " +
                                 std::to_string(succ) + " of vertex " + std::to_string(v) +
                                 " out of range 1.." + std::to_string(n));
            edges.emplace_back(v, static_cast<int>(succ));
        }
    }
    if (!ts.done())
        throw ParseError("line " + std::to_string(ts.tokens[ts.pos].second) +
                         ": trailing data after vertex " + std::to_string(n));
    return build_graph(static_cast<int>(n), weights, edges);
}

std::string write_dag(const TaskGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (int v = 1; v <= g.vertex_count(); ++v) {
        out << g.weight(v) << ' ' << g.out_degree(v);
        for (int w : g.successors(v)) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

TaskGraph load_dag(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dag(buf.str());
}

void save_dag(const TaskGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << write_dag(g);
}

std::string csv_header() {
    return "instance,n,m,bound,priority,status,makespan,lb_root,nodes_expanded,"
           "nodes_pruned,time_ms,seed";
}

std::string csv_line(const BenchRow& row) {
    std::ostringstream out;
    out << row.instance << ',' << row.n << ',' << row.m << ',' << row.bound << ','
        << row.priority << ',' << row.status << ',' << row.makespan << ',' << row.lb_root << ','
        << row.nodes_expanded << ',' << row.nodes_pruned << ',' << row.time_ms << ',' << row.seed;
    return out.str();
}

} // namespace msp
