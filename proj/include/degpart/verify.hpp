#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degpart/graph.hpp"
#include "degpart/partition_types.hpp"

namespace degpart {

// An ordering in which every vertex has at most `degeneracy` earlier
// neighbors, and no smaller bound is possible.
struct DegeneracyCertificate {
  std::vector<Vertex> ordering;
  std::int32_t degeneracy = 0;
};

// Min-degree peeling of g[subset] with a bucket queue, O(n + m). The
// ordering is the reverse removal order.
DegeneracyCertificate peel_ordering(const Graph& g, const VertexSubset& subset);
DegeneracyCertificate peel_ordering(const Graph& g);
std::int32_t degeneracy(const Graph& g);

struct PartCheck {
  std::int32_t part = 0;
  std::int64_t claimed = 0;
  std::int32_t measured = 0;
  std::size_t size = 0;
  bool pass = false;
};

struct VerifyReport {
  bool ok = false;
  bool coverage_ok = false;
  std::string coverage_error;
  std::vector<PartCheck> parts;  // non-empty parts, ascending label
};

VerifyReport verify_partition(const Graph& g, const Partition& part, const DegeneracySpec& spec);

/**
 * Exhaustive search for a partition of V(g) into the parts of `spec`.
 *
 * Assignments V -> [1, min(s, n)] are enumerated in lexicographic order and
 * the first one whose parts all meet their bounds is returned. Throws
 * TooLargeError when n > cap, when n > 10 with more than three labels, or
 * when the enumeration would exceed 5e7 assignments.
 */
std::optional<Partition> brute_force_feasible(const Graph& g, const DegeneracySpec& spec, Vertex cap = 16);

}  // namespace degpart
