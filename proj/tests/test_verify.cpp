#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "socolor/error.hpp"
#include "socolor/families.hpp"
#include "socolor/pendant.hpp"
#include "socolor/verify.hpp"

using namespace soc;
using soc::testing::range_vertices;

TEST_CASE("is_proper") {
  CHECK(is_proper(cycle(3), Coloring({1, 2, 3})));
  CHECK_FALSE(is_proper(cycle(3), Coloring({1, 1, 2})));
  CHECK_THROWS_AS(is_proper(cycle(3), Coloring({1, 2})), InvalidColoring);
  CHECK_THROWS_AS(Coloring({1, 0, 2}), InvalidColoring);
}

TEST_CASE("is_odd_coloring") {
  CHECK_FALSE(is_odd_coloring(cycle(4), Coloring({1, 2, 1, 2})));
  // Vertices 2 and 4 each see color 1 twice and nothing else.
  CHECK_FALSE(is_odd_coloring(cycle(4), Coloring({1, 2, 1, 3})));
  CHECK(is_odd_coloring(cycle(4), Coloring({1, 2, 3, 4})));
  CHECK(is_odd_coloring(cycle(6), Coloring({1, 2, 3, 1, 2, 3})));
  CHECK(is_odd_coloring(wheel(7), all_distinct(8)));
  // Isolated vertices impose nothing.
  CHECK(is_odd_coloring(empty_graph(3), Coloring({1, 1, 1})));
}

TEST_CASE("is_strong_odd") {
  CHECK(is_strong_odd(cycle(4), all_distinct(4)));
  CHECK_FALSE(is_strong_odd(cycle(4), Coloring({1, 2, 1, 3})));
  CHECK(is_strong_odd(wheel(9), Coloring({1, 2, 3, 1, 2, 3, 1, 2, 3, 4})));
  CHECK(is_strong_odd(empty_graph(5), Coloring({1, 1, 1, 1, 1})));

  // C_4 plus one pendant per vertex, 2 colors.
  Graph h = cycle(4);
  Graph f(8);
  for (auto [u, v] : h.edges()) f.add_edge(u, v);
  for (Vertex v = 0; v < 4; ++v) f.add_edge(v, v + 4);
  CHECK(is_strong_odd(f, Coloring({1, 2, 1, 2, 2, 1, 2, 1})));
}

TEST_CASE("parity report lists exactly the even positive counts") {
  const auto report = parity_report(cycle(4), Coloring({1, 2, 1, 2}));
  CHECK(report.improper_edges.empty());
  CHECK(report.counts.size() == 4);
  REQUIRE(report.violations.size() == 4);
  CHECK(report.violations[0] == NeighborhoodCount{0, 2, 2});
  CHECK(report.violations[3] == NeighborhoodCount{3, 1, 2});
  CHECK_FALSE(report.strong_odd());

  const auto bad = parity_report(cycle(3), Coloring({1, 1, 2}));
  REQUIRE(bad.improper_edges.size() == 1);
  CHECK(bad.improper_edges[0] == Edge{0, 1});

  const auto good = parity_report(wheel(9), wheel_coloring(9));
  CHECK(good.strong_odd());
  // Cycle vertices see 3 colors once each, the hub sees 3 classes of 3.
  CHECK(good.counts.size() == 9 * 3 + 3);
}

TEST_CASE("is_two_distance_on") {
  const Graph c8 = cycle(8);
  const auto all8 = range_vertices(0, 8);
  CHECK(is_two_distance_on(c8, Coloring({1, 2, 3, 4, 1, 2, 3, 4}), all8));

  const auto all6 = range_vertices(0, 6);
  CHECK_FALSE(is_two_distance_on(cycle(6), Coloring({1, 2, 1, 2, 1, 2}), all6));

  const Vertex one[] = {3};
  CHECK(is_two_distance_on(cycle(6), Coloring({1, 1, 1, 1, 1, 1}), one));

  // Distance is measured in the induced subgraph: through the hub every
  // pair of cycle vertices of W_9 is at distance 2.
  const Graph w9 = wheel(9);
  const auto c = wheel_coloring(9);
  CHECK(is_two_distance_on(w9, c, range_vertices(0, 9)));
  CHECK_FALSE(is_two_distance_on(w9, c, range_vertices(0, 10)));

  const Vertex bad[] = {0, 9};
  CHECK_THROWS_AS(is_two_distance_on(c8, all_distinct(8), bad), InvalidParameter);
  const Vertex twice[] = {1, 1};
  CHECK_THROWS_AS(is_two_distance_on(c8, all_distinct(8), twice), InvalidParameter);
}

TEST_CASE("class_parity_on") {
  const Graph w9 = wheel(9);
  const Coloring c({1, 2, 3, 1, 2, 3, 1, 2, 3, 4});
  const auto cycle_classes = class_parity_on(w9, c, range_vertices(0, 9));
  REQUIRE(cycle_classes.size() == 4);
  for (int i = 0; i < 3; ++i) {
    CHECK(cycle_classes[i].size == 3);
    CHECK(cycle_classes[i].odd());
  }
  CHECK(cycle_classes[3].size == 0);
  CHECK(all_present_classes_odd(cycle_classes));

  for (const auto& cc : class_parity_on(w9, c, {})) CHECK(cc.size == 0);

  const Coloring c14({1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4, 5, 6, 7});
  std::vector<std::size_t> sizes;
  for (const auto& cc : class_parity_on(wheel(14), c14, range_vertices(0, 14))) {
    if (cc.size > 0) sizes.push_back(cc.size);
  }
  CHECK(sizes == std::vector<std::size_t>{3, 3, 3, 3, 1, 1});

  const Vertex bad[] = {20};
  CHECK_THROWS_AS(class_parity_on(w9, c, bad), InvalidParameter);
}

TEST_CASE("all-distinct colorings are strong odd") {
  for (const auto& g : testing::random_graphs(100, 1, 12, 99)) {
    CHECK(is_strong_odd(g, all_distinct(g.num_vertices())));
  }
}

TEST_CASE("strong odd implies odd implies proper") {
  std::mt19937 rng(3);
  std::size_t strong = 0;
  std::size_t odd = 0;
  for (const auto& g : testing::random_graphs(300, 2, 8, 17)) {
    std::uniform_int_distribution<Color> pick(1, static_cast<Color>(g.num_vertices()));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Color> a(g.num_vertices());
      for (auto& x : a) x = pick(rng);
      const Coloring c(a);
      const bool s = is_strong_odd(g, c);
      const bool o = is_odd_coloring(g, c);
      const bool p = is_proper(g, c);
      if (s) CHECK(o);
      if (o) CHECK(p);
      strong += s;
      odd += o;
      CHECK(s == parity_report(g, c).strong_odd());
    }
  }
  // The sample must actually exercise the implications.
  CHECK(strong > 0);
  CHECK(odd > strong);
}
