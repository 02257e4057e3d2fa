#pragma once

#include <string>
#include <vector>

#include "msp/graph.hpp"
#include "msp/schedule.hpp"

namespace msp {

/// Static priority rules for list scheduling. Higher key wins; key ties go to
/// the lowest vertex id.
enum class PriorityRule {
    hlfet,  // highest level (heaviest path to the sink, inclusive) first
    mts,    // most transitive successors first
    lft,    // earliest latest-finish-time first (keys are negated finish times)
};

PriorityRule parse_rule(const std::string& name);   // throws ParseError
std::string rule_name(PriorityRule rule);

/// Per-vertex priority keys, 1-based with slot 0 unused. Keys depend only on
/// the graph, never on the partial schedule.
std::vector<int> priority_keys(const TaskGraph& g, PriorityRule rule);

/// Graham list scheduling: repeatedly place the highest-key ready vertex.
Schedule list_schedule(const TaskGraph& g, int machines, PriorityRule rule);

} // namespace msp
