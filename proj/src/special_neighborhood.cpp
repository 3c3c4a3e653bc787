#include <algorithm>

#include "degpart/decompose.hpp"
#include "degpart/error.hpp"
#include "degpart/partitioner.hpp"

namespace degpart {

std::string_view to_string(NeighborhoodBranch branch) {
  switch (branch) {
    case NeighborhoodBranch::kAtLeastThree:
      return "k>=3";
    case NeighborhoodBranch::kEasyLoop:
      return "easy-loop";
    case NeighborhoodBranch::kFallbackOne:
      return "k=1-fallback";
    case NeighborhoodBranch::kFallbackTwo:
      return "k=2-fallback";
  }
  return "unknown";
}

namespace {

class Search {
 public:
  Search(const Graph& g, const VertexSubset& h, Vertex v) : g_(g), h_(h), v_(v) {}

  SpecialNeighborhood run();

 private:
  template <typename F>
  void for_each_neighbor(Vertex u, F&& f) const {
    for (Vertex w : g_.neighbors(u)) {
      if (h_.contains(w)) f(w);
    }
  }

  std::vector<Vertex> neighbors(Vertex u) const {
    std::vector<Vertex> out;
    for_each_neighbor(u, [&](Vertex w) { out.push_back(w); });
    return out;
  }

  [[nodiscard]] bool in_layer(Vertex u, std::int32_t layer) const { return layers_.dist[u] == layer; }

  SpecialNeighborhood make(Vertex z, const std::vector<Vertex>& members, Vertex drop, Vertex a, Vertex b,
                           NeighborhoodBranch branch) const;

  // Non-adjacent pair inside N(z), first hit scanning ascending.
  std::pair<Vertex, Vertex> any_non_edge(const std::vector<Vertex>& nz);

  SpecialNeighborhood fallback_one();
  SpecialNeighborhood fallback_two();

  const Graph& g_;
  const VertexSubset& h_;
  const Vertex v_;
  std::int32_t delta_ = 0;
  Layering layers_;
  std::int32_t last_ = 0;
  std::int32_t k_ = 0;
  std::vector<std::int32_t> back_;       // previous-layer neighbor counts, last layer only
  std::vector<std::uint8_t> in_nz_;      // scratch membership of the current N(z)
};

SpecialNeighborhood Search::make(Vertex z, const std::vector<Vertex>& members, Vertex drop, Vertex a, Vertex b,
                                 NeighborhoodBranch branch) const {
  SpecialNeighborhood out;
  out.z = z;
  out.x = VertexSubset(g_.n());
  for (Vertex w : members) {
    if (w != drop) out.x.insert(w);
  }
  out.non_adjacent = {std::min(a, b), std::max(a, b)};
  out.branch = branch;
  out.k = k_;
  return out;
}

std::pair<Vertex, Vertex> Search::any_non_edge(const std::vector<Vertex>& nz) {
  for (Vertex w : nz) in_nz_[w] = 1;
  std::pair<Vertex, Vertex> found{kNoVertex, kNoVertex};
  for (Vertex x : nz) {
    std::size_t inside = 0;
    for_each_neighbor(x, [&](Vertex w) { inside += in_nz_[w]; });
    if (inside + 1 == nz.size()) continue;
    for (Vertex y : nz) {
      if (y != x && !g_.has_edge(x, y)) {
        found = {x, y};
        break;
      }
    }
    break;
  }
  for (Vertex w : nz) in_nz_[w] = 0;
  return found;
}

SpecialNeighborhood Search::run() {
  if (!h_.contains(v_)) throw PreconditionViolated("v is not in the block");
  const Vertex n = g_.n();
  std::vector<std::int32_t> hdeg(static_cast<std::size_t>(n), 0);
  for (Vertex u : h_.members()) {
    for_each_neighbor(u, [&](Vertex) { ++hdeg[u]; });
    delta_ = std::max(delta_, hdeg[u]);
  }
  if (delta_ < 3) throw PreconditionViolated("special neighborhood needs delta >= 3");
  for (Vertex u : h_.members()) {
    if (u != v_ && hdeg[u] != delta_) throw PreconditionViolated("vertex other than v below delta inside the block");
  }
  if (h_.size() == static_cast<std::size_t>(delta_) + 1) throw PreconditionViolated("block is K_{delta+1}");
  if (is_quasi_clique(g_, h_, delta_)) throw PreconditionViolated("block is the quasi-clique");

  layers_ = bfs_layers(g_, v_, h_);
  if (layers_.reached() != h_.size()) throw PreconditionViolated("block is not connected");
  last_ = layers_.eccentricity();
  if (last_ < 2) throw PreconditionViolated("BFS from v has fewer than three layers");
  in_nz_.assign(static_cast<std::size_t>(n), 0);

  const auto& last = layers_.layers[last_];
  back_.assign(static_cast<std::size_t>(n), 0);
  k_ = delta_ + 1;
  for (Vertex z : last) {
    for_each_neighbor(z, [&](Vertex w) { back_[z] += in_layer(w, last_ - 1) ? 1 : 0; });
    k_ = std::min(k_, back_[z]);
  }

  if (k_ >= 3) {
    const Vertex z = *std::find_if(last.begin(), last.end(), [&](Vertex u) { return back_[u] == k_; });
    const auto nz = neighbors(z);
    const auto [x1, x2] = any_non_edge(nz);
    if (x1 == kNoVertex) throw PreconditionViolated("neighborhood of z is a clique");
    const Vertex x3 = *std::find_if(nz.begin(), nz.end(),
                                    [&](Vertex w) { return in_layer(w, last_ - 1) && w != x1 && w != x2; });
    return make(z, nz, x3, x1, x2, NeighborhoodBranch::kAtLeastThree);
  }

  // Each examined z either yields the answer or marks its whole last-layer
  // neighborhood, so the sets N(z) & L_last scanned here are disjoint.
  std::vector<std::uint8_t> marked(static_cast<std::size_t>(n), 0);
  for (Vertex z : last) {
    if (marked[z] || back_[z] != k_) continue;
    const auto nz = neighbors(z);
    for (Vertex w : nz) in_nz_[w] = 1;
    // The pair may hold fewer than k previous-layer vertices: with k = 1 both
    // ends lie in the last layer, with k = 2 at least one does.
    std::size_t pool = 0;
    for (Vertex w : nz) pool += (k_ == 2 || in_layer(w, last_)) ? 1 : 0;
    Vertex x1 = kNoVertex;
    Vertex x2 = kNoVertex;
    for (Vertex x : nz) {
      if (!in_layer(x, last_)) continue;
      std::size_t adjacent = 0;
      for_each_neighbor(x, [&](Vertex w) { adjacent += (in_nz_[w] && (k_ == 2 || in_layer(w, last_))) ? 1 : 0; });
      if (adjacent + 1 == pool) continue;
      for (Vertex y : nz) {
        if (y == x || (k_ == 1 && !in_layer(y, last_))) continue;
        if (!g_.has_edge(x, y)) {
          x1 = x;
          x2 = y;
          break;
        }
      }
      break;
    }
    for (Vertex w : nz) in_nz_[w] = 0;
    if (x1 != kNoVertex) {
      const auto x3 = std::find_if(nz.begin(), nz.end(),
                                   [&](Vertex w) { return in_layer(w, last_ - 1) && w != x1 && w != x2; });
      if (x3 == nz.end()) throw InternalError("no previous-layer neighbor left outside the pair");
      return make(z, nz, *x3, x1, x2, NeighborhoodBranch::kEasyLoop);
    }
    marked[z] = 1;
    for (Vertex w : nz) {
      if (in_layer(w, last_)) marked[w] = 1;
    }
  }

  if (k_ == 1) return fallback_one();
  if (k_ == 2) return fallback_two();
  throw InternalError("k outside {1, 2} after the marking loop");
}

SpecialNeighborhood Search::fallback_one() {
  const auto& last = layers_.layers[last_];
  const Vertex u = *std::find_if(last.begin(), last.end(), [&](Vertex w) { return back_[w] == 1; });

  // C = N[u] restricted to the last layer; must be a clique of order delta.
  std::vector<Vertex> clique{u};
  for_each_neighbor(u, [&](Vertex w) {
    if (in_layer(w, last_)) clique.push_back(w);
  });
  std::sort(clique.begin(), clique.end());
  std::vector<std::uint8_t> in_c(static_cast<std::size_t>(g_.n()), 0);
  for (Vertex c : clique) in_c[c] = 1;
  if (clique.size() != static_cast<std::size_t>(delta_)) {
    throw PreconditionViolated("k = 1 fallback: closed last-layer neighborhood is not of order delta");
  }

  std::vector<std::int32_t> hits(static_cast<std::size_t>(g_.n()), 0);
  std::vector<Vertex> attached;
  for (Vertex c : clique) {
    std::size_t inside = 0;
    for_each_neighbor(c, [&](Vertex w) {
      inside += in_c[w];
      if (in_layer(w, last_ - 1)) {
        if (hits[w]++ == 0) attached.push_back(w);
      }
    });
    if (inside + 1 != clique.size()) throw PreconditionViolated("k = 1 fallback: C is not a clique");
  }
  std::sort(attached.begin(), attached.end());
  const auto pick = std::find_if(attached.begin(), attached.end(),
                                 [&](Vertex w) { return 2 * static_cast<std::size_t>(hits[w]) <= clique.size(); });
  if (pick == attached.end()) throw PreconditionViolated("k = 1 fallback: no sparse attachment to C");
  const Vertex x1 = *pick;

  Vertex z = kNoVertex;
  std::vector<Vertex> far;  // members of C not adjacent to x1
  for (Vertex c : clique) {
    if (g_.has_edge(c, x1)) {
      if (z == kNoVertex) z = c;
    } else {
      far.push_back(c);
    }
  }
  if (z == kNoVertex || far.size() < 2) throw InternalError("k = 1 fallback: degenerate attachment");
  return make(z, neighbors(z), far[1], x1, far[0], NeighborhoodBranch::kFallbackOne);
}

SpecialNeighborhood Search::fallback_two() {
  const auto& last = layers_.layers[last_];
  const Vertex u = *std::find_if(last.begin(), last.end(), [&](Vertex w) { return back_[w] == 2; });
  Vertex x[2] = {kNoVertex, kNoVertex};
  int found = 0;
  for_each_neighbor(u, [&](Vertex w) {
    if (in_layer(w, last_ - 1) && found < 2) x[found++] = w;
  });
  Vertex y[2] = {kNoVertex, kNoVertex};
  for (int i = 0; i < 2; ++i) {
    for_each_neighbor(x[i], [&](Vertex w) {
      if (y[i] == kNoVertex && in_layer(w, last_ - 2)) y[i] = w;
    });
    if (y[i] == kNoVertex) throw PreconditionViolated("k = 2 fallback: no neighbor two layers back");
  }
  if (y[0] == v_) {
    std::swap(x[0], x[1]);
    std::swap(y[0], y[1]);
  }
  if (y[0] == v_) throw PreconditionViolated("k = 2 fallback: both attachments are v");

  const auto nx = neighbors(x[0]);
  const auto partner = std::find_if(nx.begin(), nx.end(), [&](Vertex w) { return w != u && in_layer(w, last_); });
  if (partner == nx.end()) throw PreconditionViolated("k = 2 fallback: x1 has no other last-layer neighbor");
  return make(x[0], nx, u, y[0], *partner, NeighborhoodBranch::kFallbackTwo);
}

}  // namespace

SpecialNeighborhood special_neighborhood(const Graph& g, const VertexSubset& h, Vertex v) {
  SpecialNeighborhood found = Search(g, h, v).run();
#ifndef NDEBUG
  if (auto why = special_neighborhood_violation(g, h, v, found)) {
    throw InternalError("special neighborhood check failed: " + *why);
  }
#endif
  return found;
}

std::optional<std::string> special_neighborhood_violation(const Graph& g, const VertexSubset& h, Vertex v,
                                                          const SpecialNeighborhood& found) {
  std::int32_t delta = 0;
  for (Vertex u : h.members()) {
    std::int32_t d = 0;
    for (Vertex w : g.neighbors(u)) d += h.contains(w) ? 1 : 0;
    delta = std::max(delta, d);
  }
  const auto& x = found.x;
  if (!h.contains(found.z)) return "z outside the block";
  if (x.size() != static_cast<std::size_t>(delta) - 1) {
    return "|X| = " + std::to_string(x.size()) + ", expected " + std::to_string(delta - 1);
  }
  for (Vertex w : x.members()) {
    if (!h.contains(w) || !g.has_edge(found.z, w)) return "X is not inside N(z)";
  }
  if (x.contains(v)) return "v lies in X";

  bool non_edge = false;
  for (Vertex a : x.members()) {
    std::size_t inside = 0;
    for (Vertex w : g.neighbors(a)) inside += x.contains(w) ? 1 : 0;
    if (inside + 1 < x.size()) {
      non_edge = true;
      break;
    }
  }
  if (!non_edge) return "g[X] is complete";

  VertexSubset rest(g.n());
  for (Vertex u : h.members()) {
    if (!x.contains(u)) rest.insert(u);
  }
  if (bfs_layers(g, found.z, rest).reached() != rest.size()) return "block minus X is disconnected";
  return std::nullopt;
}

}  // namespace degpart
