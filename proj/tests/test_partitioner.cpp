#include <doctest.h>

#include <algorithm>

#include "degpart/decompose.hpp"
#include "degpart/error.hpp"
#include "degpart/generators.hpp"
#include "degpart/partitioner.hpp"
#include "degpart/verify.hpp"
#include "oracles.hpp"

using namespace degpart;

namespace {

std::vector<Vertex> identity(Vertex n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  return order;
}

bool valid(const Graph& g, const Partition& p, const DegeneracySpec& spec) {
  return verify_partition(g, p, spec).ok && oracle::partition_ok(g, p, spec);
}

// Replays greedy decisions from the output: each vertex sits in the
// first part whose earlier members among its neighbors are within bound.
void check_greedy_replay(const Graph& g, const std::vector<Vertex>& ordering, const Partition& p,
                         const DegeneracySpec& spec) {
  std::vector<bool> placed(static_cast<std::size_t>(g.n()), false);
  for (Vertex v : ordering) {
    const auto k = static_cast<std::size_t>(p.part_of(v));
    std::vector<std::int64_t> count(spec.size() + 1, 0);
    for (Vertex w : g.neighbors(v)) {
      if (placed[w]) ++count[p.part_of(w)];
    }
    CHECK(count[k] <= spec.capacity(k));
    for (std::size_t j = 1; j < k; ++j) CHECK(count[j] > spec.capacity(j));
    placed[v] = true;
  }
}

std::vector<Vertex> as_vector(const VertexSubset& s) {
  std::vector<Vertex> out(s.members().begin(), s.members().end());
  std::sort(out.begin(), out.end());
  return out;
}

Graph quasi_end_block_graph(std::int32_t delta, Vertex n, std::uint64_t seed) {
  return attach_end_block(quasi_clique(delta), 0, deficient_regular(n, delta, seed), 0);
}

}  // namespace

TEST_CASE("greedy_partition examples") {
  SUBCASE("edgeless") {
    const Graph g = build_graph(3, {});
    const auto p = greedy_partition(g, identity(3), DegeneracySpec({0}));
    for (Vertex v = 0; v < 3; ++v) CHECK(p.part_of(v) == 1);
  }
  SUBCASE("K4 with (1,1)") {
    const Graph g = complete_graph(4);
    const auto p = greedy_partition(g, identity(4), DegeneracySpec({1, 1}));
    CHECK(p.members(1) == std::vector<Vertex>{0, 1});
    CHECK(p.members(2) == std::vector<Vertex>{2, 3});
    CHECK(valid(g, p, DegeneracySpec({1, 1})));
  }
  SUBCASE("K4 with (0,0) saturates at vertex 2") {
    try {
      greedy_partition(complete_graph(4), identity(4), DegeneracySpec({0, 0}));
      FAIL("expected infeasible");
    } catch (const InfeasibleError& e) {
      CHECK(e.reason == InfeasibleReason::kGreedySaturated);
      CHECK(e.witness == 2);
    }
  }
  SUBCASE("ordering must be a permutation") {
    const std::vector<Vertex> bad{0, 0, 1};
    CHECK_THROWS_AS(greedy_partition(path_graph(3), bad, DegeneracySpec({1})), PreconditionViolated);
    const std::vector<Vertex> short_order{0, 1};
    CHECK_THROWS_AS(greedy_partition(path_graph(3), short_order, DegeneracySpec({1})), PreconditionViolated);
  }
  SUBCASE("only the first delta parts are used") {
    const Graph g = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    std::vector<std::int64_t> many(50, 0);
    const auto p = greedy_partition(g, identity(4), DegeneracySpec(many));
    CHECK(p.highest_used() == 3);
    CHECK(p.part_count() == 50);
  }
}

TEST_CASE("greedy_partition placement replays on random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_connected(30, 70, seed);
    // Loose: s' + sum > delta guarantees a free part at every step.
    const std::int64_t d = g.max_degree();
    const DegeneracySpec spec({d / 3, d / 3, d / 3 + 1});
    auto order = identity(30);
    std::reverse(order.begin(), order.end());
    const auto p = greedy_partition(g, order, spec);
    check_greedy_replay(g, order, p, spec);
    CHECK(valid(g, p, spec));
  }
}

TEST_CASE("non_regular_partition examples") {
  SUBCASE("P4 with (0,0) is a proper 2-colouring") {
    const Graph g = path_graph(4);
    const auto p = non_regular_partition(g, DegeneracySpec({0, 0}));
    CHECK(valid(g, p, DegeneracySpec({0, 0})));
  }
  SUBCASE("K4 minus an edge with (0,0,0)") {
    const Graph g = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    const DegeneracySpec spec({0, 0, 0});
    REQUIRE(brute_force_feasible(g, spec).has_value());
    CHECK(valid(g, non_regular_partition(g, spec), spec));
  }
  SUBCASE("star K_{1,4} with (1,1)") {
    const Graph g = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(valid(g, non_regular_partition(g, DegeneracySpec({1, 1})), DegeneracySpec({1, 1})));
  }
  SUBCASE("tight random non-regular graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Graph g = subdivided_regular(20 + static_cast<Vertex>(seed % 3) * 2, 3 + static_cast<std::int32_t>(seed % 4), seed);
      const std::int64_t delta = g.max_degree();
      const DegeneracySpec spec({0, delta - 2});
      CHECK(valid(g, non_regular_partition(g, spec), spec));
    }
  }
  CHECK_THROWS_AS(non_regular_partition(fixture("petersen"), DegeneracySpec({0, 1})), PreconditionViolated);
}

TEST_CASE("special_neighborhood examples") {
  auto check = [](const Graph& g, Vertex v) {
    const auto h = VertexSubset::all(g.n());
    const auto found = special_neighborhood(g, h, v);
    const auto problem = oracle::special_neighborhood_problem(g, as_vector(h), v, found.z, as_vector(found.x));
    CHECK_MESSAGE(problem.empty(), problem);
    CHECK_FALSE(special_neighborhood_violation(g, h, v, found).has_value());
    CHECK(!g.has_edge(found.non_adjacent.first, found.non_adjacent.second));
    CHECK(found.x.contains(found.non_adjacent.first));
    CHECK(found.x.contains(found.non_adjacent.second));
    return found;
  };

  SUBCASE("petersen") {
    const Graph g = fixture("petersen");
    const auto found = check(g, 0);
    const auto layering = bfs_layers(g, 0);
    CHECK(found.k == 1);
    CHECK(found.branch == NeighborhoodBranch::kEasyLoop);
    CHECK(layering.dist[found.z] == 2);
    for (Vertex x : found.x.members()) CHECK(layering.dist[x] == 2);
  }
  SUBCASE("K33") {
    const auto found = check(fixture("k33"), 0);
    CHECK(found.k == 3);
    CHECK(found.branch == NeighborhoodBranch::kAtLeastThree);
    CHECK(found.x.size() == 2);
  }
  SUBCASE("prism") {
    const Graph g = fixture("prism");
    const auto layering = bfs_layers(g, 0);
    CHECK(layering.layers.size() == 3);
    CHECK(layering.layers[1].size() == 3);
    CHECK(layering.layers[2].size() == 2);
    const auto found = check(g, 0);
    CHECK(found.k == 2);
    CHECK(found.branch == NeighborhoodBranch::kEasyLoop);
  }
  SUBCASE("every root of a necklace") {
    std::vector<int> branches(4, 0);
    for (std::int32_t beads = 3; beads <= 4; ++beads) {
      for (std::int32_t delta = 3; delta <= 6; ++delta) {
        const Graph g = diamond_necklace(beads, delta);
        for (Vertex v = 0; v < g.n(); ++v) ++branches[static_cast<int>(check(g, v).branch)];
      }
    }
    CHECK(branches[static_cast<int>(NeighborhoodBranch::kFallbackOne)] > 0);
    CHECK(branches[static_cast<int>(NeighborhoodBranch::kFallbackTwo)] > 0);
  }
  SUBCASE("v may have lower degree inside an end block") {
    // Two graphs with a degree-2 vertex glued there: 4-regular with a cut vertex.
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Graph g = attach_end_block(deficient_regular(12, 4, seed), 0, deficient_regular(14, 4, seed + 100), 0);
      REQUIRE(g.is_regular());
      const auto tree = block_decomposition(g);
      const auto end = select_end_block(tree, g);
      if (end.block.size() < 6 || is_quasi_clique(g, end.block, 4)) continue;
      const auto found = special_neighborhood(g, end.block, end.link);
      const auto problem =
          oracle::special_neighborhood_problem(g, tree.blocks[end.index], end.link, found.z, as_vector(found.x));
      CHECK_MESSAGE(problem.empty(), problem);
      const auto result = regular_bipartition(g, 1, 1);
      CHECK(valid(g, result.partition, DegeneracySpec({1, 1})));
    }
  }
  SUBCASE("broken contracts") {
    CHECK_THROWS_AS(special_neighborhood(complete_graph(5), VertexSubset::all(5), 0), PreconditionViolated);
    CHECK_THROWS_AS(special_neighborhood(quasi_clique(4), VertexSubset::all(6), 0), PreconditionViolated);
    CHECK_THROWS_AS(special_neighborhood(cycle_graph(6), VertexSubset::all(6), 0), PreconditionViolated);
    CHECK_THROWS_AS(special_neighborhood(fixture("petersen"), VertexSubset::of(10, std::vector<Vertex>{1, 2}), 0),
                    PreconditionViolated);
  }
  SUBCASE("violation checker flags bad answers") {
    const Graph g = fixture("petersen");
    const auto h = VertexSubset::all(10);
    auto found = special_neighborhood(g, h, 0);
    SpecialNeighborhood bad = found;
    bad.x = VertexSubset::of(10, std::vector<Vertex>{found.z});
    CHECK(special_neighborhood_violation(g, h, 0, bad).has_value());
    bad = found;
    bad.z = 0;
    CHECK(special_neighborhood_violation(g, h, 0, bad).has_value());
  }
}

TEST_CASE("regular_bipartition") {
  SUBCASE("petersen and K33 with (0,1)") {
    for (const char* name : {"petersen", "k33", "prism"}) {
      const Graph g = fixture(name);
      const auto result = regular_bipartition(g, 0, 1);
      CHECK(result.branch == BipartitionBranch::kSpecialNeighborhood);
      CHECK(valid(g, result.partition, DegeneracySpec({0, 1})));
      REQUIRE(result.partition.members(1).size() > 0);
    }
  }
  SUBCASE("the sweep sends a vertex to B only when A is saturated") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const std::int32_t delta = 3 + static_cast<std::int32_t>(seed % 4);
      const Graph g = random_regular(40, delta, seed);
      const std::int64_t p_a = (delta - 2) / 2;
      const std::int64_t p_b = delta - 2 - p_a;
      const auto result = regular_bipartition(g, p_a, p_b);
      REQUIRE(result.neighborhood.has_value());
      const auto& special = *result.neighborhood;
      CHECK(valid(g, result.partition, DegeneracySpec({p_a, p_b})));
      std::vector<bool> in_a(40, false);
      std::int64_t seeded = 0;
      for (Vertex x : special.x.members()) {
        in_a[x] = result.partition.part_of(x) == 1;
        seeded += in_a[x] ? 1 : 0;
      }
      CHECK(seeded == p_a + 2);
      for (Vertex u : postorder_from_root(g, special.z, special.x)) {
        std::int64_t count = 0;
        for (Vertex w : g.neighbors(u)) count += in_a[w] ? 1 : 0;
        if (result.partition.part_of(u) == 1) {
          CHECK(count <= p_a);
          in_a[u] = true;
        } else {
          CHECK(count >= p_a + 1);
        }
      }
    }
  }
  SUBCASE("quasi-clique end block") {
    const Graph g = quasi_end_block_graph(3, 12, 2);
    REQUIRE(g.is_regular());
    const auto result = regular_bipartition(g, 0, 1);
    CHECK(result.branch == BipartitionBranch::kQuasiCliqueEndBlock);
    CHECK(result.link == 0);
    CHECK(result.end_block == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(valid(g, result.partition, DegeneracySpec({0, 1})));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(regular_bipartition(complete_graph(5), 1, 1), PreconditionViolated);
    CHECK_THROWS_AS(regular_bipartition(fixture("petersen"), 1, 0), PreconditionViolated);
    CHECK_THROWS_AS(regular_bipartition(fixture("petersen"), 0, 0), PreconditionViolated);
    CHECK_THROWS_AS(regular_bipartition(subdivided_regular(10, 3, 1), 0, 1), PreconditionViolated);
    CHECK_THROWS_AS(regular_bipartition(cycle_graph(6), 0, 0), PreconditionViolated);
  }
}

TEST_CASE("dispatch_component examples") {
  SUBCASE("K4 with (1,1) is loose") {
    const Graph g = complete_graph(4);
    CHECK(valid(g, dispatch_component(g, DegeneracySpec({1, 1})), DegeneracySpec({1, 1})));
  }
  SUBCASE("petersen with (0,1)") {
    const Graph g = fixture("petersen");
    const auto p = dispatch_component(g, DegeneracySpec({0, 1}));
    CHECK(valid(g, p, DegeneracySpec({0, 1})));
    CHECK(brute_force_feasible(g, DegeneracySpec({0, 1})).has_value());
  }
  SUBCASE("swapped leading bounds") {
    const Graph g = fixture("petersen");
    CHECK(valid(g, dispatch_component(g, DegeneracySpec({1, 0})), DegeneracySpec({1, 0})));
    const Graph r = random_regular(30, 6, 3);
    CHECK(valid(r, dispatch_component(r, DegeneracySpec({3, 0, 1})), DegeneracySpec({3, 0, 1})));
  }
  SUBCASE("delta zeros give a proper colouring") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const std::int32_t d = 3 + static_cast<std::int32_t>(seed % 4);
      const Graph g = random_regular(24, d, seed);
      const DegeneracySpec spec(std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));
      const auto p = dispatch_component(g, spec);
      CHECK(valid(g, p, spec));
      for (const auto& e : g.edges()) CHECK(p.part_of(e.u) != p.part_of(e.v));
    }
  }
  SUBCASE("infeasible reasons") {
    auto reason_of = [](const Graph& g, const DegeneracySpec& spec) {
      try {
        dispatch_component(g, spec);
      } catch (const InfeasibleError& e) {
        return std::string(to_string(e.reason));
      }
      return std::string("ok");
    };
    CHECK(reason_of(complete_graph(4), DegeneracySpec({0, 1})) == "complete-graph-tight");
    CHECK(reason_of(cycle_graph(5), DegeneracySpec({0, 0})) == "odd-cycle-tight");
    CHECK(reason_of(fixture("petersen"), DegeneracySpec({2})) == "regular-single-part");
    CHECK(reason_of(fixture("petersen"), DegeneracySpec({0, 0})) == "below-bound");
    CHECK(reason_of(path_graph(2), DegeneracySpec({0})) == "complete-graph-tight");
    CHECK(reason_of(cycle_graph(6), DegeneracySpec({0, 0})) == "ok");
    CHECK(reason_of(path_graph(2), DegeneracySpec({0, 0})) == "ok");
    CHECK(reason_of(path_graph(7), DegeneracySpec({0, 0})) == "ok");
    CHECK(reason_of(path_graph(1), DegeneracySpec({0})) == "ok");
  }
}

TEST_CASE("partition examples") {
  SUBCASE("petersen plus K4 with (0,1)") {
    const Graph g = disjoint_union(fixture("petersen"), complete_graph(4));
    try {
      partition(g, DegeneracySpec({0, 1}));
      FAIL("expected infeasible");
    } catch (const InfeasibleError& e) {
      CHECK(e.reason == InfeasibleReason::kCompleteGraph);
      CHECK(e.component == 1);
      CHECK(e.witness == 10);
      CHECK(std::string(e.what()).find("component 1") != std::string::npos);
    }
  }
  SUBCASE("isolated vertex plus a triangle with (2)") {
    const Graph g = disjoint_union(path_graph(1), complete_graph(3));
    const auto p = partition(g, DegeneracySpec({2}));
    for (Vertex v = 0; v < 4; ++v) CHECK(p.part_of(v) == 1);
    CHECK(valid(g, p, DegeneracySpec({2})));
  }
  SUBCASE("even cycle with (0,0)") {
    const Graph g = cycle_graph(6);
    const auto p = partition(g, DegeneracySpec({0, 0}));
    CHECK(valid(g, p, DegeneracySpec({0, 0})));
  }
  SUBCASE("empty graph") { CHECK(partition(build_graph(0, {}), DegeneracySpec({0})).vertex_count() == 0); }
  SUBCASE("many components stay valid and use at most min(s, delta) parts") {
    Graph g = fixture("petersen");
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      g = disjoint_union(g, random_regular(12 + 2 * static_cast<Vertex>(seed), 4, seed));
      g = disjoint_union(g, random_connected(9, 14, seed));
    }
    const DegeneracySpec spec({0, 1, 0, 0, 0, 0, 0, 0});
    const auto p = partition(g, spec);
    CHECK(valid(g, p, spec));
    CHECK(p.non_empty_parts() <= static_cast<std::size_t>(g.max_degree()));
  }
  SUBCASE("a long sequence of bounds only labels the first parts") {
    const Graph g = random_regular(50, 5, 8);
    std::vector<std::int64_t> many(100000, 0);
    const DegeneracySpec spec(many);
    const auto p = partition(g, spec);
    CHECK(p.highest_used() <= 5);
    CHECK(valid(g, p, spec));
  }
}
