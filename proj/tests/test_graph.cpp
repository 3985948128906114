#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "kcover/generators.hpp"
#include "kcover/graph.hpp"
#include "test_helpers.hpp"

using namespace kcover;
using namespace kcover::testing;

TEST_CASE("neighborhood") {
  const Graph k4 = complete_graph(4);
  CHECK(k4.neighborhood(0).to_vector() == std::vector<int>{1, 2, 3});

  const Graph empty5(5);
  CHECK(empty5.neighborhood(2).none());

  const Graph path3 = path_graph(3);
  CHECK(path3.neighborhood(1).to_vector() == std::vector<int>{0, 2});
  CHECK(!path3.neighborhood(1).test(1));

  CHECK_THROWS_AS((void)path3.neighborhood(3), std::out_of_range);
  CHECK_THROWS_AS((void)path3.neighborhood(-1), std::out_of_range);
}

TEST_CASE("average_degree is exactly 2m/n^2") {
  CHECK(average_degree(complete_graph(4)) == Rational(3, 4));
  CHECK(average_degree(Graph(5)) == 0);
  CHECK(average_degree(gen_clique_plus_isolated(100, Rational(1, 4))) ==
        Rational(51, 200));
}

TEST_CASE("max_degree_seed") {
  SUBCASE("star has a unique max") {
    const auto seed = max_degree_seed(star_graph(6));
    CHECK(seed.u0 == 0);
    CHECK(seed.delta == 5);
    CHECK(seed.S.to_vector() == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(seed.T.to_vector() == std::vector<int>{0});
  }
  SUBCASE("complete graph ties break to vertex 0") {
    const auto seed = max_degree_seed(complete_graph(4));
    CHECK(seed.u0 == 0);
    CHECK(seed.delta == 3);
    CHECK(seed.T.to_vector() == std::vector<int>{0});
  }
  SUBCASE("clique plus isolated") {
    const auto seed = max_degree_seed(gen_clique_plus_isolated(100, Rational(1, 4)));
    CHECK(seed.u0 == 0);
    CHECK(seed.delta == 50);
    CHECK(seed.T.count() == 50);
  }
  SUBCASE("S and T partition V with |S| = delta") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
      const Graph g = gen_gnp(1 + static_cast<int>(rng() % 40), 0.3, rng());
      const auto seed = max_degree_seed(g);
      CHECK(seed.S.count() == seed.delta);
      CHECK(!seed.S.intersects(seed.T));
      Bitset all = seed.S;
      all |= seed.T;
      CHECK(all.count() == g.vertex_count());
      for (int u = 0; u < g.vertex_count(); ++u) CHECK(g.degree(u) <= seed.delta);
    }
  }
}

TEST_CASE("union_coverage") {
  const Graph k7 = complete_graph(7);
  CHECK(union_coverage(k7, std::vector<int>{0, 1}) == 7);

  const Graph empty4(4);
  CHECK(union_coverage(empty4, std::vector<int>{0, 1, 2}) == 0);

  const Graph path4 = path_graph(4);
  CHECK(union_coverage(path4, std::vector<int>{0, 3}) == 2);

  CHECK(union_coverage(path4, std::vector<int>{}) == 0);
  CHECK_THROWS_AS(union_coverage(path4, std::vector<int>{4}), std::out_of_range);

  SUBCASE("matches the std::set reference and ignores order and repeats") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 30);
      const Graph g = gen_gnp(n, 0.4, rng());
      std::vector<int> tuple;
      for (int i = 0; i < 4; ++i) tuple.push_back(static_cast<int>(rng() % n));
      const auto covered = union_coverage(g, tuple);
      CHECK(covered == naive_union_coverage(g, tuple));

      std::vector<int> shuffled = tuple;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(union_coverage(g, shuffled) == covered);

      std::vector<int> dedup = tuple;
      std::sort(dedup.begin(), dedup.end());
      dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
      CHECK(union_coverage(g, dedup) == covered);
    }
  }
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(4)) == Graph(4));
  CHECK(complement(Graph(3)) == complete_graph(3));
  CHECK(complement(path_graph(3)) == make_graph(3, {{0, 2}}));

  SUBCASE("involution and edge count") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 40);
      const Graph g = gen_gnp(n, 0.5, rng());
      const Graph h = complement(g);
      CHECK(h.edge_count() ==
            static_cast<std::int64_t>(n) * (n - 1) / 2 - g.edge_count());
      CHECK(complement(h) == g);
    }
  }
}

TEST_CASE("adjacency symmetry, zero diagonal, handshake") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 50);
    const Graph g = gen_gnp(n, 0.35, rng());
    std::int64_t degree_sum = 0;
    for (int u = 0; u < n; ++u) {
      CHECK(!g.has_edge(u, u));
      degree_sum += g.degree(u);
      for (int v = u + 1; v < n; ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
    }
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("add_edge rejects bad input") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::logic_error);
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
}
