#pragma once

#include <utility>
#include <vector>

namespace msp {

/// Immutable weighted task DAG. Vertex ids are 1-based everywhere.
///
/// A graph may be in raw form (any number of entry/exit vertices, as parsed
/// or generated) or normalized form (unique source and sink). normalize()
/// appends weight-0 endpoint vertices when needed and records their ids so
/// that measurements such as order_strength can exclude them.
class TaskGraph {
public:
    TaskGraph() = default;

    int vertex_count() const { return n_; }
    int weight(int v) const { return weight_[v]; }
    const std::vector<int>& successors(int v) const { return succ_[v]; }
    const std::vector<int>& predecessors(int v) const { return pred_[v]; }
    int in_degree(int v) const { return static_cast<int>(pred_[v].size()); }
    int out_degree(int v) const { return static_cast<int>(succ_[v].size()); }
    int total_weight() const { return total_weight_; }

    /// Id of the vertex normalize() prepended/appended; 0 when none.
    int added_source() const { return added_source_; }
    int added_sink() const { return added_sink_; }
    bool is_added(int v) const { return v == added_source_ || v == added_sink_; }
    /// Vertices excluding any normalization-added source/sink.
    int core_count() const {
        return n_ - (added_source_ ? 1 : 0) - (added_sink_ ? 1 : 0);
    }

    /// Unique in-degree-0 vertex, or 0 if the graph has several.
    int source() const { return source_; }
    /// Unique out-degree-0 vertex, or 0 if the graph has several.
    int sink() const { return sink_; }
    bool normalized() const { return source_ != 0 && sink_ != 0; }

    bool operator==(const TaskGraph&) const = default;

private:
    int n_ = 0;
    std::vector<int> weight_;               // [1..n], slot 0 unused
    std::vector<std::vector<int>> succ_;    // sorted ascending
    std::vector<std::vector<int>> pred_;    // sorted ascending
    int total_weight_ = 0;
    int source_ = 0;
    int sink_ = 0;
    int added_source_ = 0;
    int added_sink_ = 0;

    void refresh_endpoints();

    friend TaskGraph build_graph(int n, const std::vector<int>& weights,
                                 const std::vector<std::pair<int, int>>& edges);
    friend TaskGraph normalize(const TaskGraph& g);
    friend TaskGraph core_graph(const TaskGraph& g);
};

/// Validates and builds a raw task graph.
/// Throws InvalidEdge, InvalidWeight, or CycleError.
TaskGraph build_graph(int n, const std::vector<int>& weights,
                      const std::vector<std::pair<int, int>>& edges);

/// Ensures a unique source and sink, appending weight-0 vertices when the
/// graph has several entry or exit vertices. Idempotent; returns the input
/// unchanged when it already qualifies. Added vertices get the next free ids.
TaskGraph normalize(const TaskGraph& g);

/// Strips normalization-added vertices, recovering the raw instance.
TaskGraph core_graph(const TaskGraph& g);

/// Topological rank per vertex (rank[v] in 1..n): for every edge (u,v),
/// rank[u] < rank[v]. Among simultaneously available vertices the lowest id
/// comes first, so the order is deterministic.
std::vector<int> topological_order(const TaskGraph& g);

/// Per-vertex HLFET level: the total weight of the heaviest path from the
/// vertex to an exit vertex, inclusive of the vertex itself.
struct LevelTable {
    std::vector<int> level; // [1..n], slot 0 unused
    int of(int v) const { return level[v]; }
};

LevelTable hlfet_levels(const TaskGraph& g);

/// Heaviest entry-to-exit path weight (t_cp); equals level(source) on a
/// normalized graph.
int critical_path_length(const TaskGraph& g);

/// Comparable vertex pairs (transitive closure size) divided by n*(n-1)/2,
/// measured over the pre-normalization vertex set only.
double order_strength(const TaskGraph& g);

/// Number of comparable core-vertex pairs, the numerator of order_strength.
long long transitive_pair_count(const TaskGraph& g);

} // namespace msp
