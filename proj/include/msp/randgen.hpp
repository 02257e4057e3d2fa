#pragma once

#include <cstdint>

#include "msp/graph.hpp"

namespace msp {

/// What to generate: n tasks with uniformly random integer weights, wired
/// into a random DAG whose order strength is tuned toward target_os.
struct GenSpec {
    int n = 20;
    double target_os = 0.1;
    double os_tolerance = 0.02;
    int min_weight = 1;
    int max_weight = 10;
    std::uint64_t seed = 0;
};

struct GenResult {
    TaskGraph graph;          // normalized: unique source and sink
    double achieved_os = 0;   // order strength over the original n tasks
    bool os_met = false;      // achieved within os_tolerance of the target
};

/// Deterministic in spec.seed: fixes a random topological labeling and
/// weights once, then bisects the forward-edge probability (re-sampling
/// edges with per-round sub-seeds) until the order strength lands within
/// tolerance. If the tolerance is unreachable (granularity at small n) the
/// closest instance found is returned with os_met = false.
/// Throws ParseError on an invalid spec (n < 2, target outside (0,1),
/// weight range empty or below 1).
GenResult generate(const GenSpec& spec);

/// SplitMix64 mixing step; the project's standard way to derive independent
/// sub-seeds from one master seed.
std::uint64_t split_mix64(std::uint64_t& state);

} // namespace msp
