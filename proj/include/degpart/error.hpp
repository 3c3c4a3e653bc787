#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace degpart {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SelfLoopError : public Error {
 public:
  explicit SelfLoopError(std::int64_t u)
      : Error("self-loop at vertex " + std::to_string(u)), vertex(u) {}
  std::int64_t vertex;
};

class DuplicateEdgeError : public Error {
 public:
  DuplicateEdgeError(std::int64_t u, std::int64_t v)
      : Error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v)), u(u), v(v) {}
  std::int64_t u;
  std::int64_t v;
};

class VertexRangeError : public Error {
 public:
  VertexRangeError(std::int64_t vertex, std::int64_t n)
      : Error("vertex " + std::to_string(vertex) + " outside [0, " + std::to_string(n) + ")"),
        vertex(vertex) {}
  std::int64_t vertex;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

class DisconnectedError : public Error {
 public:
  using Error::Error;
};

// The graph left after removing an excluded vertex set is not connected.
class DisconnectedAfterRemovalError : public DisconnectedError {
 public:
  using DisconnectedError::DisconnectedError;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// A self-check failed. Always a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

enum class InfeasibleReason {
  kBelowBound,        // sum of the first s' capacities is below delta - s'
  kCompleteGraph,     // K_{delta+1} with a tight sequence
  kOddCycle,          // odd cycle with sequence (0,0)
  kRegularSinglePart, // regular graph, tight, single effective part
  kGreedySaturated,   // greedy placement found every part saturated
};

std::string_view to_string(InfeasibleReason reason);

class InfeasibleError : public Error {
 public:
  static constexpr std::int64_t kUnknown = -1;

  InfeasibleError(InfeasibleReason reason, const std::string& detail,
                  std::int64_t component = kUnknown, std::int64_t witness = kUnknown);

  // Same failure, re-attributed to a component of a larger graph.
  [[nodiscard]] InfeasibleError in_component(std::int64_t component,
                                             std::int64_t first_vertex) const;

  InfeasibleReason reason;
  std::string detail;
  std::int64_t component;
  // Lowest original vertex id of the component, or the vertex at fault.
  std::int64_t witness;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class UnknownNameError : public Error {
 public:
  explicit UnknownNameError(std::string_view name)
      : Error("unknown fixture '" + std::string(name) + "'") {}
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace degpart
