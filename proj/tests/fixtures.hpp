#pragma once

#include "msp/graph.hpp"

namespace fixtures {

/// 1 -> {2,3} -> 4, weights 1,2,3,1. Critical path 1-3-4 of weight 5.
inline msp::TaskGraph diamond() {
    return msp::build_graph(4, {1, 2, 3, 1}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

/// 1 -> 2 -> 3, weights 1,2,3.
inline msp::TaskGraph chain3() {
    return msp::build_graph(3, {1, 2, 3}, {{1, 2}, {2, 3}});
}

/// Four independent unit tasks; normalization adds endpoints 5 and 6.
inline msp::TaskGraph parallel4() {
    return msp::build_graph(4, {1, 1, 1, 1}, {});
}

} // namespace fixtures
