#include <doctest.h>

#include <algorithm>

#include "degpart/decompose.hpp"
#include "degpart/error.hpp"
#include "degpart/generators.hpp"
#include "degpart/random.hpp"
#include "oracles.hpp"

using namespace degpart;

namespace {

std::vector<std::int32_t> sorted_degrees(const Graph& g) {
  std::vector<std::int32_t> out;
  for (Vertex v = 0; v < g.n(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

// Shortest cycle length by BFS from every vertex.
int girth(const Graph& g) {
  int best = 1 << 30;
  for (Vertex r = 0; r < g.n(); ++r) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(g.n()), -1);
    std::vector<Vertex> queue{r};
    dist[r] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("splitmix64 stream") {
  // Reference outputs of splitmix64 seeded with 0.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
  SplitMix64 a(42);
  SplitMix64 b(42);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.below(7);
    CHECK(x == b.below(7));
    CHECK(x < 7);
  }
}

TEST_CASE("fixtures") {
  const Graph q3 = fixture("quasi_clique(3)");
  CHECK(q3.n() == 5);
  CHECK(q3.m() == 7);
  CHECK(sorted_degrees(q3) == std::vector<std::int32_t>{2, 3, 3, 3, 3});

  const Graph petersen = fixture("petersen");
  CHECK(petersen.n() == 10);
  CHECK(petersen.m() == 15);
  CHECK(girth(petersen) == 5);

  CHECK(fixture("complete(5)").m() == 10);
  CHECK(fixture("cycle(7)").m() == 7);
  CHECK(fixture("path(4)").m() == 3);
  CHECK(fixture("prism").m() == 9);
  CHECK(girth(fixture("prism")) == 3);
  CHECK(girth(fixture("k33")) == 4);

  for (std::int32_t delta = 3; delta <= 8; ++delta) {
    const Graph q = quasi_clique(delta);
    CHECK(q.n() == delta + 2);
    CHECK(q.m() == static_cast<std::int64_t>(delta + 1) * delta / 2 + 1);
    CHECK(q.degree(0) == 2);
    CHECK_FALSE(q.has_edge(1, 2));
  }

  CHECK_THROWS_AS(fixture("dodecahedron"), UnknownNameError);
  CHECK_THROWS_AS(fixture("complete(x)"), UnknownNameError);
  CHECK_THROWS_AS(fixture("cycle(3"), UnknownNameError);
}

TEST_CASE("random_regular") {
  CHECK(random_regular(4, 3, 123) == fixture("complete(4)"));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::int32_t d = 3 + static_cast<std::int32_t>(seed % 6);
    const Vertex n = 10 + static_cast<Vertex>(seed % 4) * 2;
    const Graph g = random_regular(n, d, seed);
    CHECK(g.is_regular());
    CHECK(g.max_degree() == d);
    CHECK(is_connected(g));
    CHECK(g == random_regular(n, d, seed));
  }
  CHECK(random_regular(10, 3, 1).is_regular());
  CHECK_FALSE(random_regular(50, 3, 1) == random_regular(50, 3, 2));
  CHECK_THROWS_AS(random_regular(7, 3, 0), ParityError);
  CHECK_THROWS_AS(random_regular(4, 4, 0), RangeError);
  CHECK_THROWS_AS(random_regular(6, 1, 0), RangeError);
  CHECK(random_regular(2, 1, 0).m() == 1);
}

TEST_CASE("random_connected") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph tree = random_connected(5, 4, seed);
    CHECK(tree.m() == 4);
    CHECK(is_connected(tree));
    CHECK(random_connected(5, 10, seed) == fixture("complete(5)"));
    const Graph g = random_connected(6, 8, seed);
    CHECK(g.m() == 8);
    CHECK(is_connected(g));
    CHECK(g.max_degree() <= 5);
    CHECK(g == random_connected(6, 8, seed));
  }
  const Graph dense = random_connected(40, 700, 3);
  CHECK(dense.m() == 700);
  CHECK(is_connected(dense));
  CHECK_THROWS_AS(random_connected(5, 3, 0), RangeError);
  CHECK_THROWS_AS(random_connected(5, 11, 0), RangeError);
}

TEST_CASE("attach_end_block") {
  const Graph triangles = attach_end_block(complete_graph(3), 0, complete_graph(3), 0);
  CHECK(triangles.n() == 5);
  CHECK(triangles.m() == 6);
  CHECK(triangles.degree(0) == 4);
  CHECK(block_decomposition(triangles).cut_vertices.contains(0));

  const Graph g = random_connected(12, 20, 4);
  const Graph joined = attach_end_block(g, 5, fixture("petersen"), 3);
  CHECK(joined.m() == g.m() + 15);
  CHECK(joined.degree(5) == g.degree(5) + 3);
  CHECK(joined.n() == 12 + 9);

  SUBCASE("regular graph with a quasi-clique end block") {
    for (std::int32_t delta = 3; delta <= 6; ++delta) {
      const Graph base = deficient_regular(14, delta, 9);
      CHECK(base.degree(0) == delta - 2);
      const Graph r = attach_end_block(quasi_clique(delta), 0, base, 0);
      CHECK(r.is_regular());
      CHECK(r.max_degree() == delta);
      const auto tree = block_decomposition(r);
      const auto end = select_end_block(tree, r);
      CHECK(is_quasi_clique(r, end.block, delta));
      CHECK(end.link == 0);
    }
  }
  CHECK_THROWS_AS(attach_end_block(g, 12, g, 0), VertexRangeError);
}

TEST_CASE("other families") {
  SUBCASE("necklace") {
    for (std::int32_t delta = 3; delta <= 6; ++delta) {
      const Graph g = diamond_necklace(3, delta);
      CHECK(g.is_regular());
      CHECK(g.max_degree() == delta);
      CHECK(block_decomposition(g).blocks.size() == 1);
    }
    CHECK_THROWS_AS(diamond_necklace(1, 3), RangeError);
  }
  SUBCASE("truncation") {
    const Graph t = truncated(fixture("petersen"));
    CHECK(t.n() == 30);
    CHECK(t.m() == 45);
    CHECK(t.is_regular());
    CHECK(t.max_degree() == 3);
    CHECK(is_connected(t));
  }
  SUBCASE("subdivided and deficient") {
    const Graph s = subdivided_regular(12, 4, 3);
    CHECK(s.n() == 13);
    CHECK(s.degree(0) == 2);
    CHECK(s.m() == 12 * 4 / 2 + 1);
    const Graph d = deficient_regular(12, 5, 3);
    CHECK(d.degree(0) == 3);
    for (Vertex v = 1; v < 12; ++v) CHECK(d.degree(v) == 5);
    CHECK(is_connected(d));
  }
  SUBCASE("disjoint union") {
    const Graph u = disjoint_union(complete_graph(3), path_graph(2));
    CHECK(u.n() == 5);
    CHECK(u.has_edge(3, 4));
    CHECK(analyze(u).components.size() == 2);
  }
}
