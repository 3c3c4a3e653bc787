#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degpart/graph.hpp"
#include "degpart/partition_types.hpp"

namespace degpart {

/**
 * Places the vertices in `ordering` one by one, each into the first part k
 * that currently holds at most p_k of its neighbors. Uses the first
 * min(s, max(delta, 1)) parts. O(n + m + s').
 *
 * Throws InfeasibleError (greedy-saturated) when every part is saturated for
 * some vertex; that cannot happen when each vertex has fewer than
 * s' + p_1 + ... + p_s' earlier neighbors.
 */
Partition greedy_partition(const Graph& g, std::span<const Vertex> ordering, const DegeneracySpec& spec);

// Connected, non-regular g: greedy placement along a spanning-tree post-order
// rooted at the lowest-id vertex of degree below delta.
Partition non_regular_partition(const Graph& g, const DegeneracySpec& spec);

enum class NeighborhoodBranch {
  kAtLeastThree,  // k >= 3, immediate return
  kEasyLoop,      // returned from the marking loop
  kFallbackOne,   // k == 1 after the loop: the clique case
  kFallbackTwo,   // k == 2 after the loop
};

std::string_view to_string(NeighborhoodBranch branch);

/**
 * A vertex z and a set X of delta - 1 of its neighbors such that g[X] is not
 * complete and removing X leaves the graph connected.
 */
struct SpecialNeighborhood {
  Vertex z = kNoVertex;
  VertexSubset x;
  std::pair<Vertex, Vertex> non_adjacent{kNoVertex, kNoVertex};  // witness for "not complete"
  NeighborhoodBranch branch = NeighborhoodBranch::kAtLeastThree;
  std::int32_t k = 0;  // min number of previous-layer neighbors over the last BFS layer
};

/**
 * Finds a special neighborhood of g[h] avoiding v, in O(n + m).
 *
 * g[h] must be 2-connected, neither K_{delta+1} nor the quasi-clique, with
 * every vertex other than v of degree delta >= 3 inside h. Contract breaches
 * that surface along the way raise PreconditionViolated. Debug builds check
 * the result with special_neighborhood_violation.
 */
SpecialNeighborhood special_neighborhood(const Graph& g, const VertexSubset& h, Vertex v);

// Independent check of the special-neighborhood properties inside g[h] plus
// v not in X. Returns a description of the first violated property.
std::optional<std::string> special_neighborhood_violation(const Graph& g, const VertexSubset& h, Vertex v,
                                                          const SpecialNeighborhood& found);

enum class BipartitionBranch { kQuasiCliqueEndBlock, kSpecialNeighborhood };

struct RegularBipartition {
  Partition partition;  // label 1 = A (p_a-degenerate), label 2 = B (p_b-degenerate)
  BipartitionBranch branch = BipartitionBranch::kSpecialNeighborhood;
  std::vector<Vertex> end_block;
  Vertex link = kNoVertex;
  std::optional<SpecialNeighborhood> neighborhood;
};

// Connected delta-regular g, delta >= 3, g != K_{delta+1},
// p_a <= p_b, p_a + p_b = delta - 2. Throws PreconditionViolated otherwise.
RegularBipartition regular_bipartition(const Graph& g, std::int64_t p_a, std::int64_t p_b);

// Connected g. Chooses greedy, non-regular or regular handling from the
// spec and the degree structure. Components with delta <= 2 are handled
// directly (paths always succeed with s >= 2, even cycles are 2-coloured).
Partition dispatch_component(const Graph& g, const DegeneracySpec& spec);

// Any simple graph: dispatches every connected component and merges.
// InfeasibleError carries the component index and its lowest vertex id.
Partition partition(const Graph& g, const DegeneracySpec& spec);

}  // namespace degpart
