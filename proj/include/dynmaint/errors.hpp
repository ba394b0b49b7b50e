#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dynmaint {

// shared default for every search's node-expansion budget
inline constexpr std::size_t default_node_cap = 10'000'000;

// Base for everything thrown on purpose by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An edit's precondition does not hold in the current graph
// (duplicate edge, missing endpoint, vertex already present, ...).
struct PreconditionViolation : Error {
    explicit PreconditionViolation(const std::string& msg) : Error(msg) {}
};

// A vertex id referenced by a query does not exist.
struct UnknownVertex : Error {
    explicit UnknownVertex(const std::string& msg) : Error(msg) {}
};

// A generator was asked for something structurally impossible
// (e.g. churn on a graph that cannot host a single edge).
struct Degenerate : Error {
    explicit Degenerate(const std::string& msg) : Error(msg) {}
};

// A maintainer produced a set that fails its problem's feasibility check.
// Carries the 1-based step at which validation failed (0 = initial state).
struct InvalidSolution : Error {
    long long step;
    InvalidSolution(long long step_, const std::string& msg)
        : Error("step " + std::to_string(step_) + ": " + msg), step(step_) {}
};

// A quantity that needs per-step optima was requested from a run
// that was executed without an oracle.
struct MissingOracle : Error {
    explicit MissingOracle(const std::string& msg) : Error(msg) {}
};

// A component was asked about a problem kind it does not handle.
struct UnsupportedProblem : Error {
    explicit UnsupportedProblem(const std::string& msg) : Error(msg) {}
};

// Internal bookkeeping disagrees with the graph (defensive checks).
struct CorruptState : Error {
    explicit CorruptState(const std::string& msg) : Error(msg) {}
};

// An exact solver / complete search exceeded its node budget.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// Reduction parameters: class size must be even.
struct OddClassSize : Error {
    explicit OddClassSize(const std::string& msg) : Error(msg) {}
};

// Reduction parameters outside the constructible range.
struct InfeasibleParameters : Error {
    explicit InfeasibleParameters(const std::string& msg) : Error(msg) {}
};

// Malformed input file (graph / script / report parsing).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace dynmaint
