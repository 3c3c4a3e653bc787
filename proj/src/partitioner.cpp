#include "degpart/partitioner.hpp"

#include <algorithm>
#include <numeric>

#include "degpart/decompose.hpp"
#include "degpart/error.hpp"
#include "degpart/verify.hpp"

namespace degpart {

namespace {

/**
 * Greedy placement into a list of slots. Slot i has capacity caps[i] and
 * writes label labels[i] into `out`. Only vertices already placed by this
 * call count as neighbors, so placing an ordering of a subset B partitions
 * g[B].
 */
void greedy_place(const Graph& g, std::span<const Vertex> ordering, std::span<const std::int64_t> caps,
                  std::span<const std::int32_t> labels, Partition& out) {
  std::vector<std::int32_t> slot(static_cast<std::size_t>(g.n()), -1);
  std::vector<std::int64_t> count(caps.size(), 0);
  for (Vertex v : ordering) {
    for (Vertex w : g.neighbors(v)) {
      if (slot[w] >= 0) ++count[slot[w]];
    }
    // Each skipped slot holds a neighbor of v, so the scan is paid for by edges.
    std::size_t k = 0;
    while (k < caps.size() && count[k] > caps[k]) ++k;
    for (Vertex w : g.neighbors(v)) {
      if (slot[w] >= 0) count[slot[w]] = 0;
    }
    if (k == caps.size()) {
      throw InfeasibleError(InfeasibleReason::kGreedySaturated,
                            "every part is saturated at vertex " + std::to_string(v), InfeasibleError::kUnknown, v);
    }
    slot[v] = static_cast<std::int32_t>(k);
    out.assign(v, labels[k]);
  }
}

void greedy_prefix(const Graph& g, std::span<const Vertex> ordering, const DegeneracySpec& spec, std::size_t parts,
                   Partition& out) {
  std::vector<std::int64_t> caps(spec.values().begin(), spec.values().begin() + static_cast<std::ptrdiff_t>(parts));
  std::vector<std::int32_t> labels(parts);
  std::iota(labels.begin(), labels.end(), 1);
  greedy_place(g, ordering, caps, labels, out);
}

std::vector<Vertex> identity_order(Vertex n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

InfeasibleError infeasible(InfeasibleReason reason, const std::string& detail) {
  return InfeasibleError(reason, detail);
}

// Proper 2-colouring of an even cycle by walking around it.
Partition two_colour_cycle(const Graph& g, std::size_t part_count) {
  Partition out(g.n(), part_count);
  Vertex prev = kNoVertex;
  Vertex cur = 0;
  for (Vertex step = 0; step < g.n(); ++step) {
    out.assign(cur, step % 2 == 0 ? 1 : 2);
    const auto nbrs = g.neighbors(cur);
    const Vertex next = nbrs[0] != prev ? nbrs[0] : nbrs[1];
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace

Partition greedy_partition(const Graph& g, std::span<const Vertex> ordering, const DegeneracySpec& spec) {
  if (ordering.size() != static_cast<std::size_t>(g.n())) {
    throw PreconditionViolated("ordering is not a permutation of the vertices");
  }
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : ordering) {
    if (v < 0 || v >= g.n() || seen[v]++) throw PreconditionViolated("ordering is not a permutation of the vertices");
  }
  Partition out(g.n(), spec.size());
  greedy_prefix(g, ordering, spec, spec.effective_parts(std::max(g.max_degree(), 1)), out);
  return out;
}

Partition non_regular_partition(const Graph& g, const DegeneracySpec& spec) {
  const std::int32_t delta = g.max_degree();
  if (!spec.is_feasible(delta)) throw PreconditionViolated("sequence below the degree bound");
  Vertex root = kNoVertex;
  for (Vertex v = 0; v < g.n() && root == kNoVertex; ++v) {
    if (g.degree(v) < delta) root = v;
  }
  if (root == kNoVertex) throw PreconditionViolated("graph is regular");
  // Every vertex but the root precedes its tree parent, so it has at most
  // delta - 1 earlier neighbors; the root has degree below delta.
  const auto order = postorder_from_root(g, root);
  Partition out(g.n(), spec.size());
  greedy_prefix(g, order, spec, spec.effective_parts(delta), out);
  return out;
}

RegularBipartition regular_bipartition(const Graph& g, std::int64_t p_a, std::int64_t p_b) {
  const std::int32_t delta = g.max_degree();
  if (delta < 3) throw PreconditionViolated("regular bipartition needs delta >= 3");
  if (!g.is_regular()) throw PreconditionViolated("graph is not regular");
  if (g.n() == delta + 1) throw PreconditionViolated("graph is K_{delta+1}");
  if (p_a < 0 || p_a > p_b || p_a + p_b != delta - 2) {
    throw PreconditionViolated("need 0 <= p_a <= p_b and p_a + p_b = delta - 2");
  }

  const BlockTree tree = block_decomposition(g);
  const EndBlock end = select_end_block(tree, g);
  const Vertex v = end.link;

  RegularBipartition result;
  result.partition = Partition(g.n(), 2);
  result.end_block.assign(end.block.members().begin(), end.block.members().end());
  result.link = v;
  Partition& out = result.partition;

  if (is_quasi_clique(g, end.block, delta)) {
    result.branch = BipartitionBranch::kQuasiCliqueEndBlock;
    std::vector<Vertex> near;
    for (Vertex w : g.neighbors(v)) {
      if (end.block.contains(w)) near.push_back(w);
    }
    if (near.size() != 2 || tree.blocks.size() < 2) {
      throw InternalError("quasi-clique end block is not attached through its subdivision vertex");
    }

    // Partition everything outside H \ {v}; v now has degree delta - 2 there.
    VertexSubset rest(g.n());
    for (Vertex u = 0; u < g.n(); ++u) {
      if (u == v || !end.block.contains(u)) rest.insert(u);
    }
    const InducedSubgraph sub = induced_subgraph(g, rest);
    const Partition inner = dispatch_component(sub.graph, DegeneracySpec({p_a, p_b}));
    for (Vertex local = 0; local < sub.graph.n(); ++local) {
      out.assign(sub.to_original[local], inner.part_of(local));
    }

    const std::int32_t own = out.part_of(v);
    const std::int32_t other = 3 - own;
    const std::int64_t other_cap = other == 1 ? p_a : p_b;
    const std::int64_t own_cap = own == 1 ? p_a : p_b;
    out.assign(near[0], other);
    out.assign(near[1], other);
    std::int64_t placed_other = 0;
    std::int64_t placed_own = 0;
    for (Vertex u : end.block.members()) {
      if (u == v || u == near[0] || u == near[1]) continue;
      if (placed_other < other_cap) {
        out.assign(u, other);
        ++placed_other;
      } else {
        out.assign(u, own);
        ++placed_own;
      }
    }
    if (placed_own != own_cap + 1) throw InternalError("quasi-clique split does not add up");
    return result;
  }

  result.branch = BipartitionBranch::kSpecialNeighborhood;
  SpecialNeighborhood special = special_neighborhood(g, end.block, v);
  const VertexSubset& x = special.x;

  // Seed A with the non-adjacent pair plus the p_a lowest remaining ids of X.
  std::vector<std::int32_t> in_a(static_cast<std::size_t>(g.n()), 0);
  auto add_to_a = [&](Vertex u) {
    out.assign(u, 1);
    for (Vertex w : g.neighbors(u)) ++in_a[w];
  };
  add_to_a(special.non_adjacent.first);
  add_to_a(special.non_adjacent.second);
  std::vector<Vertex> seeds(x.members().begin(), x.members().end());
  std::sort(seeds.begin(), seeds.end());
  std::int64_t extra = 0;
  for (Vertex u : seeds) {
    if (u == special.non_adjacent.first || u == special.non_adjacent.second) continue;
    if (extra < p_a) {
      add_to_a(u);
      ++extra;
    } else {
      out.assign(u, 2);
    }
  }

  // Counts are taken in g, so X counts too.
  for (Vertex u : postorder_from_root(g, special.z, x)) {
    if (in_a[u] <= p_a) {
      add_to_a(u);
    } else {
      out.assign(u, 2);
    }
  }
  result.neighborhood = std::move(special);
  return result;
}

Partition dispatch_component(const Graph& g, const DegeneracySpec& spec) {
  const Vertex n = g.n();
  Partition out(n, spec.size());
  if (n == 0) return out;
  const std::int32_t delta = g.max_degree();
  if (delta == 0) {
    for (Vertex v = 0; v < n; ++v) out.assign(v, 1);
    return out;
  }

  const std::size_t parts = spec.effective_parts(delta);
  const std::int64_t sum = spec.prefix_sum(parts);
  const std::int64_t bound = static_cast<std::int64_t>(delta) - static_cast<std::int64_t>(parts);
  if (sum < bound) {
    throw infeasible(InfeasibleReason::kBelowBound, "sum of the first " + std::to_string(parts) + " bounds is " +
                                                         std::to_string(sum) + " < delta - s' = " +
                                                         std::to_string(bound));
  }
  if (sum > bound) {
    greedy_prefix(g, identity_order(n), spec, parts, out);
    return out;
  }

  // Tight from here on.
  if (!g.is_regular()) return non_regular_partition(g, spec);
  const bool complete = n == delta + 1;
  if (delta == 1) {
    // A single edge is a path; two parts of bound 0 split it.
    if (spec.size() < 2) throw infeasible(InfeasibleReason::kCompleteGraph, "single edge with one part of bound 0");
    greedy_prefix(g, identity_order(n), spec, 2, out);
    return out;
  }
  if (complete) {
    throw infeasible(InfeasibleReason::kCompleteGraph,
                     "K_" + std::to_string(n) + " needs the bounds to sum to at least delta - s' + 1");
  }
  if (parts == 1) {
    throw infeasible(InfeasibleReason::kRegularSinglePart,
                     "a " + std::to_string(delta) + "-regular graph is not " + std::to_string(delta - 1) +
                         "-degenerate");
  }
  if (delta == 2) {
    if (n % 2 == 1) throw infeasible(InfeasibleReason::kOddCycle, "odd cycle with bounds (0,0)");
    return two_colour_cycle(g, spec.size());
  }

  const std::int64_t p1 = spec.capacity(1);
  const std::int64_t p2 = spec.capacity(2);
  const std::int64_t p_minus = std::min(p1, p2);
  const std::int64_t p_plus = std::max(p1, p2);
  const std::int64_t p_rest = delta - 2 - p_minus;
  const RegularBipartition bip = regular_bipartition(g, p_minus, p_rest);

  const std::int32_t label_minus = p1 <= p2 ? 1 : 2;
  const std::int32_t label_plus = p1 <= p2 ? 2 : 1;
  VertexSubset b(n);
  for (Vertex v = 0; v < n; ++v) {
    if (bip.partition.part_of(v) == 1) {
      out.assign(v, label_minus);
    } else {
      b.insert(v);
    }
  }
  // Refine B, which is (delta - 2 - p_minus)-degenerate, along a peeling order.
  const DegeneracyCertificate cert = peel_ordering(g, b);
  if (cert.degeneracy > p_rest) throw InternalError("second part of the bipartition exceeds its bound");
  std::vector<std::int64_t> caps{p_plus};
  std::vector<std::int32_t> labels{label_plus};
  for (std::size_t i = 3; i <= parts; ++i) {
    caps.push_back(spec.capacity(i));
    labels.push_back(static_cast<std::int32_t>(i));
  }
  greedy_place(g, cert.ordering, caps, labels, out);
  return out;
}

Partition partition(const Graph& g, const DegeneracySpec& spec) {
  const ComponentReport report = analyze(g);
  if (report.components.size() <= 1) {
    try {
      return dispatch_component(g, spec);
    } catch (const InfeasibleError& e) {
      throw e.in_component(0, 0);
    }
  }

  // Local ids are positions inside each component's ascending vertex list,
  // shared by all components so the split stays linear overall.
  std::vector<Vertex> local_id(static_cast<std::size_t>(g.n()));
  for (const auto& info : report.components) {
    for (std::size_t i = 0; i < info.vertices.size(); ++i) local_id[info.vertices[i]] = static_cast<Vertex>(i);
  }
  Partition out(g.n(), spec.size());
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    const auto& vertices = report.components[c].vertices;
    edges.clear();
    for (Vertex u : vertices) {
      for (Vertex w : g.neighbors(u)) {
        if (u < w) edges.push_back({local_id[u], local_id[w]});
      }
    }
    const Graph sub = build_graph(static_cast<Vertex>(vertices.size()), edges);
    Partition local;
    try {
      local = dispatch_component(sub, spec);
    } catch (const InfeasibleError& e) {
      throw e.in_component(static_cast<std::int64_t>(c), vertices.front());
    }
    for (Vertex u = 0; u < sub.n(); ++u) out.assign(vertices[u], local.part_of(u));
  }
  return out;
}

}  // namespace degpart
