#pragma once

#include <stdexcept>
#include <string>

namespace msp {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The edge set admits no topological order.
struct CycleError : Error {
    using Error::Error;
};

/// Edge endpoint out of range, self-loop, or duplicate edge.
struct InvalidEdge : Error {
    using Error::Error;
};

/// Negative task weight.
struct InvalidWeight : Error {
    using Error::Error;
};

/// A permutation schedules a vertex before one of its predecessors.
struct PrecedenceError : Error {
    using Error::Error;
};

/// A permutation schedules the same vertex twice.
struct DuplicateVertex : Error {
    using Error::Error;
};

/// Makespan requested on a partial solution that does not cover all vertices.
struct IncompleteSchedule : Error {
    using Error::Error;
};

/// Malformed instance file; message carries the offending line number.
struct ParseError : Error {
    using Error::Error;
};

/// Instance exceeds the brute-force enumeration cap.
struct TooLarge : Error {
    using Error::Error;
};

/// Machine count below one.
struct InvalidMachineCount : Error {
    using Error::Error;
};

} // namespace msp
