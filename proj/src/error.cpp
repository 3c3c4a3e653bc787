#include "degpart/error.hpp"

namespace degpart {

std::string_view to_string(InfeasibleReason reason) {
  switch (reason) {
    case InfeasibleReason::kBelowBound:
      return "below-bound";
    case InfeasibleReason::kCompleteGraph:
      return "complete-graph-tight";
    case InfeasibleReason::kOddCycle:
      return "odd-cycle-tight";
    case InfeasibleReason::kRegularSinglePart:
      return "regular-single-part";
    case InfeasibleReason::kGreedySaturated:
      return "greedy-saturated";
  }
  return "unknown";
}

namespace {

std::string describe(InfeasibleReason reason, const std::string& detail, std::int64_t component,
                     std::int64_t witness) {
  std::string out = "infeasible";
  if (component != InfeasibleError::kUnknown) {
    out += " component " + std::to_string(component);
    if (witness != InfeasibleError::kUnknown) {
      out += " (vertex " + std::to_string(witness) + ")";
    }
  }
  out += " [";
  out += to_string(reason);
  out += "]: " + detail;
  return out;
}

}  // namespace

InfeasibleError::InfeasibleError(InfeasibleReason reason, const std::string& detail,
                                 std::int64_t component, std::int64_t witness)
    : Error(describe(reason, detail, component, witness)),
      reason(reason),
      detail(detail),
      component(component),
      witness(witness) {}

InfeasibleError InfeasibleError::in_component(std::int64_t c, std::int64_t first_vertex) const {
  return InfeasibleError(reason, detail, c, first_vertex);
}

}  // namespace degpart
