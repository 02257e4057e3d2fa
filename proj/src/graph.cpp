#include "msp/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "msp/errors.hpp"

namespace msp {

void TaskGraph::refresh_endpoints() {
    source_ = 0;
    sink_ = 0;
    int sources = 0, sinks = 0;
    for (int v = 1; v <= n_; ++v) {
        if (pred_[v].empty()) {
            ++sources;
            source_ = v;
        }
        if (succ_[v].empty()) {
            ++sinks;
            sink_ = v;
        }
    }
    if (sources != 1) source_ = 0;
    if (sinks != 1) sink_ = 0;
}

TaskGraph build_graph(int n, const std::vector<int>& weights,
                      const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw InvalidEdge("vertex count must be at least 1");
    if (static_cast<int>(weights.size()) != n)
        throw InvalidWeight("expected " + std::to_string(n) + " weights, got " +
                            std::to_string(weights.size()));
    for (int v = 1; v <= n; ++v)
        if (weights[v - 1] < 0)
            throw InvalidWeight("vertex " + std::to_string(v) + " has negative weight " +
                                std::to_string(weights[v - 1]));

    TaskGraph g;
    g.n_ = n;
    g.weight_.assign(n + 1, 0);
    g.succ_.assign(n + 1, {});
    g.pred_.assign(n + 1, {});
    for (int v = 1; v <= n; ++v) {
        g.weight_[v] = weights[v - 1];
        g.total_weight_ += weights[v - 1];
    }
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw InvalidEdge("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") endpoint out of range 1.." + std::to_string(n));
        if (u == v)
            throw InvalidEdge("self-loop at vertex " + std::to_string(u));
        g.succ_[u].push_back(v);
        g.pred_[v].push_back(u);
    }
    for (int v = 1; v <= n; ++v) {
        std::sort(g.succ_[v].begin(), g.succ_[v].end());
        std::sort(g.pred_[v].begin(), g.pred_[v].end());
        if (std::adjacent_find(g.succ_[v].begin(), g.succ_[v].end()) != g.succ_[v].end())
            throw InvalidEdge("duplicate edge out of vertex " + std::to_string(v));
    }

    // Kahn scan; throwing here keeps acyclicity a type invariant.
    std::vector<int> indeg(n + 1);
    std::queue<int> q;
    for (int v = 1; v <= n; ++v) {
        indeg[v] = g.in_degree(v);
        if (indeg[v] == 0) q.push(v);
    }
    int seen = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        ++seen;
        for (int v : g.succ_[u])
            if (--indeg[v] == 0) q.push(v);
    }
    if (seen != n) throw CycleError("edge set admits no topological order");

    g.refresh_endpoints();
    return g;
}

TaskGraph normalize(const TaskGraph& g) {
    std::vector<int> entries, exits;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (g.in_degree(v) == 0) entries.push_back(v);
        if (g.out_degree(v) == 0) exits.push_back(v);
    }
    if (entries.size() == 1 && exits.size() == 1) return g;

    TaskGraph r = g;
    if (entries.size() > 1) {
        int s = ++r.n_;
        r.weight_.push_back(0);
        r.succ_.push_back(entries);
        r.pred_.emplace_back();
        for (int v : entries) r.pred_[v].push_back(s);
        r.added_source_ = s;
    }
    if (exits.size() > 1) {
        int t = ++r.n_;
        r.weight_.push_back(0);
        r.succ_.emplace_back();
        r.pred_.push_back(exits);
        for (int v : exits) r.succ_[v].push_back(t);
        r.added_sink_ = t;
    }
    r.refresh_endpoints();
    return r;
}

TaskGraph core_graph(const TaskGraph& g) {
    if (!g.added_source() && !g.added_sink()) return g;
    // Added vertices hold the highest ids, so the core is a prefix.
    int n = g.core_count();
    TaskGraph r;
    r.n_ = n;
    r.weight_.assign(g.weight_.begin(), g.weight_.begin() + n + 1);
    r.succ_.assign(n + 1, {});
    r.pred_.assign(n + 1, {});
    for (int v = 1; v <= n; ++v) {
        for (int w : g.succ_[v])
            if (w <= n) r.succ_[v].push_back(w);
        for (int w : g.pred_[v])
            if (w <= n) r.pred_[v].push_back(w);
        r.total_weight_ += r.weight_[v];
    }
    r.refresh_endpoints();
    return r;
}

std::vector<int> topological_order(const TaskGraph& g) {
    int n = g.vertex_count();
    std::vector<int> indeg(n + 1), rank(n + 1, 0);
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 1; v <= n; ++v) {
        indeg[v] = g.in_degree(v);
        if (indeg[v] == 0) ready.push(v);
    }
    int next = 0;
    while (!ready.empty()) {
        int u = ready.top();
        ready.pop();
        rank[u] = ++next;
        for (int v : g.successors(u))
            if (--indeg[v] == 0) ready.push(v);
    }
    return rank;
}

LevelTable hlfet_levels(const TaskGraph& g) {
    int n = g.vertex_count();
    std::vector<int> rank = topological_order(g);
    std::vector<int> by_rank(n + 1);
    for (int v = 1; v <= n; ++v) by_rank[rank[v]] = v;

    LevelTable t;
    t.level.assign(n + 1, 0);
    for (int r = n; r >= 1; --r) {
        int v = by_rank[r];
        int best = 0;
        for (int w : g.successors(v)) best = std::max(best, t.level[w]);
        t.level[v] = g.weight(v) + best;
    }
    return t;
}

int critical_path_length(const TaskGraph& g) {
    LevelTable t = hlfet_levels(g);
    int best = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.in_degree(v) == 0) best = std::max(best, t.level[v]);
    return best;
}

long long transitive_pair_count(const TaskGraph& g) {
    int n = g.vertex_count();
    long long pairs = 0;
    std::vector<char> seen(n + 1);
    std::vector<int> stack;
    for (int u = 1; u <= n; ++u) {
        if (g.is_added(u)) continue;
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(g.successors(u).begin(), g.successors(u).end());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (seen[v]) continue;
            seen[v] = 1;
            if (!g.is_added(v)) ++pairs;
            for (int w : g.successors(v))
                if (!seen[w]) stack.push_back(w);
        }
    }
    return pairs;
}

double order_strength(const TaskGraph& g) {
    long long n = g.core_count();
    long long denom = n * (n - 1) / 2;
    if (denom == 0) return 0.0;
    return static_cast<double>(transitive_pair_count(g)) / static_cast<double>(denom);
}

} // namespace msp
