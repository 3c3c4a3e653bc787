#include "degpart/decompose.hpp"

#include <algorithm>

#include "degpart/error.hpp"

namespace degpart {

BlockTree block_decomposition(const Graph& g) {
  const Vertex n = g.n();
  BlockTree tree;
  tree.cut_vertices = VertexSubset(n);
  if (n == 0) return tree;
  if (n == 1) {
    tree.blocks = {{0}};
    tree.block_edges = {0};
    tree.block_cuts = {{}};
    return tree;
  }

  const auto offsets = g.offsets();
  const auto adjacency = g.adjacency();
  // One record per vertex keeps the random accesses of the DFS to one line.
  struct State {
    std::int32_t disc = -1;
    std::int32_t low = 0;
    Vertex parent = kNoVertex;
    std::int32_t cursor = 0;  // next neighbor slot
    std::int64_t up = 0;      // edges to earlier-discovered neighbors
  };
  std::vector<State> state(static_cast<std::size_t>(n));
  std::vector<Vertex> stack;
  // Discovered vertices not yet assigned to a block. Each block is a cut
  // vertex p plus the run of this stack down to the child that closed it.
  std::vector<Vertex> pending;
  // (block, vertex) incidences, redistributed below so members come out sorted.
  std::vector<std::pair<std::int32_t, Vertex>> incidences;
  incidences.reserve(static_cast<std::size_t>(n) + 16);
  std::int32_t timer = 0;

  state[0].disc = state[0].low = timer++;
  stack.push_back(0);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    State& sv = state[v];
    if (sv.cursor == 0) {
      // Neighbor records are scattered; request them all before the scan.
      for (auto i = offsets[v]; i < offsets[v + 1]; ++i) {
        __builtin_prefetch(&state[adjacency[i]]);
        __builtin_prefetch(&offsets[adjacency[i]]);
      }
    }
    if (offsets[v] + sv.cursor < offsets[v + 1]) {
      const Vertex w = adjacency[offsets[v] + sv.cursor++];
      State& sw = state[w];
      if (sw.disc == -1) {
        sw.parent = v;
        sw.disc = sw.low = timer++;
        sw.up = 1;
        pending.push_back(w);
        stack.push_back(w);
      } else if (w != sv.parent && sw.disc < sv.disc) {
        ++sv.up;
        sv.low = std::min(sv.low, sw.disc);
      }
      continue;
    }
    stack.pop_back();
    if (stack.empty()) break;
    const Vertex p = sv.parent;
    State& sp = state[p];
    sp.low = std::min(sp.low, sv.low);
    if (sv.low < sp.disc) continue;

    // p separates the subtree of v: v and its pending descendants form a block with p.
    const auto block = static_cast<std::int32_t>(tree.block_edges.size());
    std::int64_t edges = 0;
    incidences.emplace_back(block, p);
    while (true) {
      const Vertex x = pending.back();
      pending.pop_back();
      edges += state[x].up;
      incidences.emplace_back(block, x);
      if (x == v) break;
    }
    tree.block_edges.push_back(edges);
  }
  if (timer != n) throw DisconnectedError("block decomposition needs a connected graph");

  const auto block_count = tree.block_edges.size();
  tree.blocks.resize(block_count);
  tree.block_cuts.resize(block_count);
  // Group incidences by vertex (counting sort), then walk vertices in order.
  std::vector<std::size_t> start(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& inc : incidences) ++start[inc.second + 1];
  for (Vertex x = 0; x < n; ++x) start[x + 1] += start[x];
  std::vector<std::int32_t> by_vertex(incidences.size());
  {
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (const auto& [block, x] : incidences) by_vertex[fill[x]++] = block;
  }
  for (Vertex x = 0; x < n; ++x) {
    const bool cut = start[x + 1] - start[x] >= 2;
    if (cut) tree.cut_vertices.insert(x);
    for (std::size_t i = start[x]; i < start[x + 1]; ++i) {
      tree.blocks[by_vertex[i]].push_back(x);
      if (cut) tree.block_cuts[by_vertex[i]].push_back(x);
    }
  }
  return tree;
}

EndBlock select_end_block(const BlockTree& tree, const Graph& g) {
  if (tree.blocks.empty()) throw PreconditionViolated("graph has no blocks");
  std::size_t best = tree.blocks.size();
  for (std::size_t i = 0; i < tree.blocks.size(); ++i) {
    if (tree.block_cuts[i].size() > 1) continue;
    if (best == tree.blocks.size() || tree.blocks[i] < tree.blocks[best]) best = i;
  }
  if (best == tree.blocks.size()) throw InternalError("block-cut tree without a leaf block");
  EndBlock end;
  end.index = best;
  end.block = VertexSubset::of(g.n(), tree.blocks[best]);
  end.link = tree.block_cuts[best].empty() ? tree.blocks[best].front() : tree.block_cuts[best].front();
  return end;
}

std::vector<Vertex> postorder_from_root(const Graph& g, Vertex root, const VertexSubset& excluded) {
  const Vertex n = g.n();
  if (root < 0 || root >= n) throw PreconditionViolated("root outside the graph");
  if (excluded.contains(root)) throw PreconditionViolated("root is excluded");

  const auto offsets = g.offsets();
  const auto adjacency = g.adjacency();
  // cursor[v]: -1 while unseen, else the next neighbor slot. Excluded
  // vertices start as seen with nothing to scan.
  std::vector<std::int32_t> cursor(static_cast<std::size_t>(n), -1);
  for (Vertex x : excluded.members()) cursor[x] = 0;
  std::vector<Vertex> stack{root};
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n) - excluded.size());
  cursor[root] = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    const auto first = offsets[v];
    const auto degree = static_cast<std::int32_t>(offsets[v + 1] - first);
    if (cursor[v] == 0) {
      for (std::int32_t i = 0; i < degree; ++i) {
        __builtin_prefetch(&cursor[adjacency[first + i]]);
        __builtin_prefetch(&offsets[adjacency[first + i]]);
      }
    }
    if (cursor[v] < degree) {
      const Vertex w = adjacency[first + cursor[v]++];
      if (cursor[w] == -1) {
        cursor[w] = 0;
        stack.push_back(w);
      }
      continue;
    }
    order.push_back(v);
    stack.pop_back();
  }
  if (order.size() + excluded.size() != static_cast<std::size_t>(n)) {
    throw DisconnectedAfterRemovalError("graph minus the excluded set is not connected");
  }
  return order;
}

std::vector<Vertex> postorder_from_root(const Graph& g, Vertex root) {
  return postorder_from_root(g, root, VertexSubset(g.n()));
}

std::size_t Layering::reached() const {
  std::size_t total = 0;
  for (const auto& layer : layers) total += layer.size();
  return total;
}

Layering bfs_layers(const Graph& g, Vertex v, const VertexSubset& within) {
  if (!within.contains(v)) throw PreconditionViolated("BFS root outside the vertex set");
  Layering out;
  out.dist.assign(static_cast<std::size_t>(g.n()), -1);
  std::vector<Vertex> queue{v};
  out.dist[v] = 0;
  std::int32_t deepest = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (out.dist[w] == -1 && within.contains(w)) {
        out.dist[w] = out.dist[u] + 1;
        deepest = out.dist[w];
        queue.push_back(w);
      }
    }
  }
  out.layers.resize(static_cast<std::size_t>(deepest) + 1);
  for (Vertex u = 0; u < g.n(); ++u) {
    if (out.dist[u] >= 0) out.layers[out.dist[u]].push_back(u);
  }
  return out;
}

Layering bfs_layers(const Graph& g, Vertex v) { return bfs_layers(g, v, VertexSubset::all(g.n())); }

bool is_quasi_clique(const Graph& g, const VertexSubset& h, std::int32_t delta) {
  if (delta < 2 || h.size() != static_cast<std::size_t>(delta) + 2) return false;
  Vertex special = kNoVertex;
  std::int64_t degree_sum = 0;
  for (Vertex u : h.members()) {
    std::int32_t d = 0;
    for (Vertex w : g.neighbors(u)) d += h.contains(w) ? 1 : 0;
    degree_sum += d;
    if (d == delta) continue;
    if (d != 2 || special != kNoVertex) return false;
    special = u;
  }
  if (special == kNoVertex) {
    // delta == 2: every vertex has degree 2, any of them can be the subdivision vertex.
    if (delta != 2) return false;
    special = *std::min_element(h.members().begin(), h.members().end());
  }
  if (degree_sum != static_cast<std::int64_t>(delta + 1) * delta + 2) return false;
  Vertex ends[2];
  int found = 0;
  for (Vertex w : g.neighbors(special)) {
    if (h.contains(w)) ends[found++] = w;
  }
  return found == 2 && !g.has_edge(ends[0], ends[1]);
}

}  // namespace degpart
