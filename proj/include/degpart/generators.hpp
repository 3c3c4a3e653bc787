#pragma once

#include <cstdint>
#include <string_view>

#include "degpart/graph.hpp"

namespace degpart {

/**
 * Named fixtures: petersen, prism, k33, complete(k), cycle(k), path(k),
 * quasi_clique(d). In quasi_clique(d) vertex 0 subdivides the edge {1, 2} of
 * a K_{d+1} on 1..d+1. Throws UnknownNameError.
 */
Graph fixture(std::string_view name);

Graph complete_graph(Vertex k);
Graph cycle_graph(Vertex k);
Graph path_graph(Vertex k);
Graph quasi_clique(std::int32_t delta);

// Connected d-regular simple graph, deterministic per seed. Pairs points at
// random, rejecting pairs that would make a loop or a repeated edge, and
// restarts when stuck. Disconnected draws are redrawn from the same stream.
// Throws ParityError when n*d is odd and RangeError when no connected
// d-regular graph on n vertices exists.
Graph random_regular(Vertex n, std::int32_t d, std::uint64_t seed);

// Random recursive tree plus m - n + 1 distinct extra edges. RangeError
// unless n - 1 <= m <= n(n-1)/2.
Graph random_connected(Vertex n, std::int64_t m, std::uint64_t seed);

// Disjoint union of g and block with v in g identified with w in block.
// Block vertex b != w becomes g.n() + (b < w ? b : b - 1).
Graph attach_end_block(const Graph& g, Vertex v, const Graph& block, Vertex w);

// b's vertices are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

// Ring of `beads` copies of K_{delta+1} minus an edge, consecutive copies
// joined through the endpoints of the missing edge. delta-regular and
// 2-connected; beads >= 2.
Graph diamond_necklace(std::int32_t beads, std::int32_t delta);

// Replaces every vertex of degree d by a K_d, one clique vertex per incident
// edge. A d-regular input gives a d-regular output.
Graph truncated(const Graph& g);

// Connected graph where vertex 0 has degree d - 2 and every other vertex
// degree d: two edges at 0 are swapped for an edge between their far ends.
Graph deficient_regular(Vertex n, std::int32_t d, std::uint64_t seed);

// A random d-regular graph on n vertices with one edge subdivided by a new
// vertex 0.
Graph subdivided_regular(Vertex n, std::int32_t d, std::uint64_t seed);

}  // namespace degpart
