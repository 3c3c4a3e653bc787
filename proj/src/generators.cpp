#include "degpart/generators.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <unordered_set>
#include <vector>

#include "degpart/error.hpp"
#include "degpart/random.hpp"

namespace degpart {

namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

// Parses "name(k)" into its argument; nullopt-like -1 when the name differs.
std::int64_t argument_of(std::string_view name, std::string_view prefix) {
  if (name.size() < prefix.size() + 3 || name.substr(0, prefix.size()) != prefix) return -1;
  if (name[prefix.size()] != '(' || name.back() != ')') return -1;
  const auto digits = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  std::int64_t value = -1;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 0) return -1;
  return value;
}

// One attempt at pairing n*d points; empty when it got stuck.
std::vector<Edge> try_pairing(Vertex n, std::int32_t d, SplitMix64& rng) {
  std::vector<Vertex> points;
  points.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), static_cast<std::size_t>(d), v);
  std::unordered_set<std::uint64_t> used;
  used.reserve(points.size());
  std::vector<Edge> edges;
  edges.reserve(points.size() / 2);
  constexpr int kMaxMisses = 256;
  int misses = 0;
  while (!points.empty()) {
    const auto i = static_cast<std::size_t>(rng.below(points.size()));
    const auto j = static_cast<std::size_t>(rng.below(points.size()));
    const Vertex a = points[i];
    const Vertex b = points[j];
    if (i == j || a == b || used.count(edge_key(a, b)) != 0) {
      if (++misses > kMaxMisses) return {};
      continue;
    }
    misses = 0;
    used.insert(edge_key(a, b));
    edges.push_back({std::min(a, b), std::max(a, b)});
    // Remove both points by swapping with the tail, larger index first.
    const std::size_t hi = std::max(i, j);
    const std::size_t lo = std::min(i, j);
    points[hi] = points.back();
    points.pop_back();
    points[lo] = points.back();
    points.pop_back();
  }
  return edges;
}

Graph regular_with_stream(Vertex n, std::int32_t d, SplitMix64& rng) {
  constexpr int kMaxDraws = 10000;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    auto edges = try_pairing(n, d, rng);
    if (edges.empty() && n * static_cast<std::int64_t>(d) > 0) continue;
    Graph g = build_graph(n, edges);
    if (is_connected(g)) return g;
  }
  throw RangeError("no connected " + std::to_string(d) + "-regular graph found on " + std::to_string(n) +
                   " vertices");
}

}  // namespace

Graph complete_graph(Vertex k) {
  if (k < 0) throw RangeError("negative order");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) edges.push_back({u, v});
  }
  return build_graph(k, edges);
}

Graph cycle_graph(Vertex k) {
  if (k < 3) throw RangeError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u) edges.push_back({u, (u + 1) % k});
  return build_graph(k, edges);
}

Graph path_graph(Vertex k) {
  if (k < 1) throw RangeError("a path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < k; ++u) edges.push_back({u, u + 1});
  return build_graph(k, edges);
}

Graph quasi_clique(std::int32_t delta) {
  if (delta < 2) throw RangeError("quasi-clique needs delta >= 2");
  std::vector<Edge> edges{{0, 1}, {0, 2}};
  for (Vertex u = 1; u <= delta + 1; ++u) {
    for (Vertex v = u + 1; v <= delta + 1; ++v) {
      if (u != 1 || v != 2) edges.push_back({u, v});
    }
  }
  return build_graph(delta + 2, edges);
}

Graph fixture(std::string_view name) {
  if (name == "petersen") {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
      edges.push_back({i, (i + 1) % 5});
      edges.push_back({i, i + 5});
      edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return build_graph(10, edges);
  }
  if (name == "prism") {
    return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  }
  if (name == "k33") {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 3; ++u) {
      for (Vertex v = 3; v < 6; ++v) edges.push_back({u, v});
    }
    return build_graph(6, edges);
  }
  constexpr std::int64_t kMaxOrder = 1 << 20;
  if (auto k = argument_of(name, "complete"); k >= 0 && k <= 4096) return complete_graph(static_cast<Vertex>(k));
  if (auto k = argument_of(name, "cycle"); k >= 0 && k <= kMaxOrder) return cycle_graph(static_cast<Vertex>(k));
  if (auto k = argument_of(name, "path"); k >= 0 && k <= kMaxOrder) return path_graph(static_cast<Vertex>(k));
  if (auto k = argument_of(name, "quasi_clique"); k >= 0 && k <= 4096) {
    return quasi_clique(static_cast<std::int32_t>(k));
  }
  throw UnknownNameError(name);
}

Graph random_regular(Vertex n, std::int32_t d, std::uint64_t seed) {
  if (n < 1 || d < 0) throw RangeError("need n >= 1 and d >= 0");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0) {
    throw ParityError("n*d = " + std::to_string(static_cast<std::int64_t>(n) * d) + " is odd");
  }
  if (d >= n) throw RangeError("need d < n");
  if (d <= 1 && n > d + 1) throw RangeError("no connected " + std::to_string(d) + "-regular graph on " +
                                            std::to_string(n) + " vertices");
  SplitMix64 rng(seed);
  return regular_with_stream(n, d, rng);
}

Graph random_connected(Vertex n, std::int64_t m, std::uint64_t seed) {
  if (n < 1) throw RangeError("need n >= 1");
  const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_edges) {
    throw RangeError("m = " + std::to_string(m) + " outside [" + std::to_string(n - 1) + ", " +
                     std::to_string(max_edges) + "]");
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::unordered_set<std::uint64_t> used;
  for (Vertex v = 1; v < n; ++v) {
    const auto parent = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
    edges.push_back({parent, v});
    used.insert(edge_key(parent, v));
  }
  const std::int64_t need = m - (n - 1);
  const std::int64_t free_pairs = max_edges - (n - 1);
  if (need * 2 > free_pairs) {
    // Dense: list every free pair (at most 2 * need of them) and take a prefix.
    std::vector<Edge> pool;
    pool.reserve(static_cast<std::size_t>(free_pairs));
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (used.count(edge_key(u, v)) == 0) pool.push_back({u, v});
      }
    }
    rng.shuffle(pool);
    edges.insert(edges.end(), pool.begin(), pool.begin() + need);
  } else {
    while (static_cast<std::int64_t>(edges.size()) < m) {
      const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      if (u == v || !used.insert(edge_key(u, v)).second) continue;
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  return build_graph(n, edges);
}

Graph attach_end_block(const Graph& g, Vertex v, const Graph& block, Vertex w) {
  if (v < 0 || v >= g.n()) throw VertexRangeError(v, g.n());
  if (w < 0 || w >= block.n()) throw VertexRangeError(w, block.n());
  auto map = [&](Vertex b) { return b == w ? v : g.n() + (b < w ? b : b - 1); };
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : block.edges()) edges.push_back({map(e.u), map(e.v)});
  return build_graph(g.n() + block.n() - 1, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.n(), e.v + a.n()});
  return build_graph(a.n() + b.n(), edges);
}

Graph diamond_necklace(std::int32_t beads, std::int32_t delta) {
  if (beads < 2 || delta < 2) throw RangeError("need beads >= 2 and delta >= 2");
  const Vertex size = delta + 1;
  std::vector<Edge> edges;
  // In each bead local vertex 0 and 1 are the ends of the missing edge.
  for (Vertex b = 0; b < beads; ++b) {
    const Vertex base = b * size;
    for (Vertex u = 0; u < size; ++u) {
      for (Vertex v = u + 1; v < size; ++v) {
        if (u != 0 || v != 1) edges.push_back({base + u, base + v});
      }
    }
    edges.push_back({base + 1, ((b + 1) % beads) * size});
  }
  return build_graph(beads * size, edges);
}

Graph truncated(const Graph& g) {
  // Vertex v's clique occupies [offsets[v], offsets[v+1]); slot i of v stands
  // for the edge to its i-th neighbor.
  const auto offsets = g.offsets();
  const Vertex total = static_cast<Vertex>(offsets.back());
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto nbrs = g.neighbors(v);
    const auto base = static_cast<Vertex>(offsets[v]);
    for (Vertex i = 0; i < static_cast<Vertex>(nbrs.size()); ++i) {
      for (Vertex j = i + 1; j < static_cast<Vertex>(nbrs.size()); ++j) edges.push_back({base + i, base + j});
      const Vertex w = nbrs[i];
      if (w < v) continue;
      const auto back = g.neighbors(w);
      const auto j = static_cast<Vertex>(std::lower_bound(back.begin(), back.end(), v) - back.begin());
      edges.push_back({base + i, static_cast<Vertex>(offsets[w]) + j});
    }
  }
  return build_graph(total, edges);
}

Graph deficient_regular(Vertex n, std::int32_t d, std::uint64_t seed) {
  if (d < 3) throw RangeError("need d >= 3");
  SplitMix64 rng(seed);
  constexpr int kMaxDraws = 1000;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const Graph base = regular_with_stream(n, d, rng);
    const auto nbrs = base.neighbors(0);
    Vertex y1 = kNoVertex;
    Vertex y2 = kNoVertex;
    for (std::size_t i = 0; i < nbrs.size() && y1 == kNoVertex; ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!base.has_edge(nbrs[i], nbrs[j])) {
          y1 = nbrs[i];
          y2 = nbrs[j];
          break;
        }
      }
    }
    if (y1 == kNoVertex) continue;
    std::vector<Edge> edges;
    for (const Edge& e : base.edges()) {
      if (e.u == 0 && (e.v == y1 || e.v == y2)) continue;
      edges.push_back(e);
    }
    edges.push_back({y1, y2});
    Graph g = build_graph(n, edges);
    if (is_connected(g)) return g;
  }
  throw RangeError("no connected deficient graph found");
}

Graph subdivided_regular(Vertex n, std::int32_t d, std::uint64_t seed) {
  const Graph base = random_regular(n, d, seed);
  std::vector<Edge> edges;
  const auto all = base.edges();
  for (std::size_t i = 1; i < all.size(); ++i) edges.push_back({all[i].u + 1, all[i].v + 1});
  edges.push_back({0, all[0].u + 1});
  edges.push_back({0, all[0].v + 1});
  return build_graph(n + 1, edges);
}

}  // namespace degpart
