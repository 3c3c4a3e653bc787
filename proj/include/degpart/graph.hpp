#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace degpart {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

struct Edge {
  Vertex u;
  Vertex v;
};

/**
 * Immutable simple undirected graph in compressed adjacency form.
 *
 * Vertices are the dense range [0, n). The neighbors of v occupy
 * adjacency()[offsets()[v] .. offsets()[v+1]) and are sorted ascending, so
 * every "lowest id first" tie-break downstream is a plain forward scan.
 */
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  [[nodiscard]] Vertex n() const { return static_cast<Vertex>(offsets_.size() - 1); }
  [[nodiscard]] std::int64_t m() const { return static_cast<std::int64_t>(adjacency_.size() / 2); }

  [[nodiscard]] std::int32_t degree(Vertex v) const {
    return static_cast<std::int32_t>(offsets_[v + 1] - offsets_[v]);
  }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::int32_t max_degree() const { return max_degree_; }
  [[nodiscard]] bool is_regular() const;

  // O(log degree).
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;

  [[nodiscard]] std::span<const std::int64_t> offsets() const { return offsets_; }
  [[nodiscard]] std::span<const Vertex> adjacency() const { return adjacency_; }

  // Every edge once as (u, v) with u < v, in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph build_graph(Vertex n, std::span<const Edge> edges);

  std::vector<std::int64_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::int32_t max_degree_ = 0;
};

// Throws VertexRangeError, SelfLoopError or DuplicateEdgeError. Runs in O(n + m).
Graph build_graph(Vertex n, std::span<const Edge> edges);
inline Graph build_graph(Vertex n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// Edge-list text: '#' comment lines, a header "n m", then m lines "u v".
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string serialize_edge_list(const Graph& g);

/// Set of vertices over the universe [0, n) with O(1) membership.
class VertexSubset {
 public:
  explicit VertexSubset(Vertex universe = 0) : member_(static_cast<std::size_t>(universe), 0) {}

  // Throws std::invalid_argument on out-of-range or repeated ids.
  static VertexSubset of(Vertex universe, std::span<const Vertex> members);
  static VertexSubset all(Vertex universe);

  [[nodiscard]] bool contains(Vertex v) const { return member_[v] != 0; }
  // Returns false if v was already present.
  bool insert(Vertex v);

  [[nodiscard]] std::span<const Vertex> members() const { return members_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] Vertex universe() const { return static_cast<Vertex>(member_.size()); }

 private:
  std::vector<Vertex> members_;
  std::vector<std::uint8_t> member_;
};

struct ComponentInfo {
  std::vector<Vertex> vertices;  // ascending
  std::int64_t edges = 0;
  std::int32_t max_degree = 0;
  bool is_regular = false;
  bool is_complete = false;
};

struct ComponentReport {
  std::vector<ComponentInfo> components;
  std::vector<std::int32_t> component_of;
};

ComponentReport analyze(const Graph& g);
bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;  // local id -> id in the parent graph
  std::vector<Vertex> to_local;     // parent id -> local id, or kNoVertex
};

// Local ids follow the order of s.members().
InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& s);

}  // namespace degpart
