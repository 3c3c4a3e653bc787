#pragma once

#include <cstdint>
#include <vector>

#include "degpart/graph.hpp"

namespace degpart {

/**
 * Biconnected blocks of a connected graph.
 *
 * Each block is a maximal 2-connected subgraph or a bridge; every edge lies
 * in exactly one block. Blocks touch only at cut vertices, so block_cuts
 * doubles as the adjacency of the block-cut tree.
 */
struct BlockTree {
  std::vector<std::vector<Vertex>> blocks;      // members ascending
  std::vector<std::int64_t> block_edges;        // edge count per block
  std::vector<std::vector<Vertex>> block_cuts;  // cut vertices inside each block, ascending
  VertexSubset cut_vertices;

  [[nodiscard]] VertexSubset block_subset(std::size_t i) const {
    return VertexSubset::of(cut_vertices.universe(), blocks[i]);
  }
};

// Iterative lowpoint computation, O(n + m). Throws DisconnectedError.
BlockTree block_decomposition(const Graph& g);

struct EndBlock {
  std::size_t index = 0;
  VertexSubset block;
  // The cut vertex linking the block to the rest of the graph, or the
  // lowest id of the block when the graph is a single block.
  Vertex link = kNoVertex;
};

// Among blocks with at most one cut vertex, picks the one whose sorted
// member list is lexicographically smallest (so lowest minimum id first).
EndBlock select_end_block(const BlockTree& tree, const Graph& g);

/**
 * Depth-first post-order of a spanning tree of g minus `excluded`, rooted at
 * `root`. The root comes last and every other vertex precedes its tree
 * parent. Throws DisconnectedAfterRemovalError if some non-excluded vertex
 * is unreachable, PreconditionViolated if the root is excluded.
 */
std::vector<Vertex> postorder_from_root(const Graph& g, Vertex root, const VertexSubset& excluded);
std::vector<Vertex> postorder_from_root(const Graph& g, Vertex root);

struct Layering {
  // dist[u] is the BFS distance from the root, -1 outside the search.
  std::vector<std::int32_t> dist;
  // layers[i] holds the vertices at distance i, ascending.
  std::vector<std::vector<Vertex>> layers;

  [[nodiscard]] std::int32_t eccentricity() const { return static_cast<std::int32_t>(layers.size()) - 1; }
  [[nodiscard]] std::size_t reached() const;
};

// BFS over g[within] from v. Vertices of `within` that are not reachable
// keep dist -1.
Layering bfs_layers(const Graph& g, Vertex v, const VertexSubset& within);
Layering bfs_layers(const Graph& g, Vertex v);

// g[h] is K_{delta+1} with exactly one edge subdivided. Linear in the size of g[h].
bool is_quasi_clique(const Graph& g, const VertexSubset& h, std::int32_t delta);

}  // namespace degpart
