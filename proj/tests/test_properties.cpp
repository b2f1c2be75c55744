#include "doctest.h"

#include <algorithm>

#include "core/properties.hpp"
#include "testutil.hpp"

using namespace strongequiv;
using namespace strongequiv::properties;
using testutil::gparse;

namespace {

// Independent hamiltonicity oracle: try every vertex ordering.
bool ham_by_permutations(const Graph& g) {
  VertexSet vset = g.vertices();
  std::vector<VertexLabel> vs(vset.begin(), vset.end());
  if (vs.size() < 3) return false;
  std::sort(vs.begin(), vs.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < vs.size() && ok; ++i)
      ok = g.contains(Edge(vs[i], vs[(i + 1) % vs.size()]));
    if (ok) return true;
  } while (std::next_permutation(vs.begin(), vs.end()));
  return false;
}

Graph k5() { return testutil::complete_graph(testutil::letters(5)); }

Graph k33() {
  Graph g;
  for (const char* u : {"a", "b", "c"})
    for (const char* v : {"x", "y", "z"}) g.add(u, v);
  return g;
}

// On at most 6 vertices the only Kuratowski subdivisions are K5, K33 and K5
// with a single subdivided edge, so subgraph search decides planarity.
bool planar_by_subdivision_search(const Graph& g) {
  static const Graph p_k5 = k5();
  static const Graph p_k33 = k33();
  static const Graph p_k5_subdiv = [] {
    Graph s = k5().without(Edge("a", "b"));
    s.add("a", "w").add("w", "b");
    return s;
  }();
  REQUIRE(g.vertex_count() <= 6);
  return !contains_subgraph(p_k5, g) && !contains_subgraph(p_k33, g) &&
         !contains_subgraph(p_k5_subdiv, g);
}

}  // namespace

TEST_CASE("hamiltonicity basics") {
  CHECK(is_hamiltonian(gparse("a b\nb c\na c")));
  CHECK(!is_hamiltonian(gparse("a b\nb c")));
  Graph k4e = testutil::complete_graph(testutil::letters(4)).without(Edge("a", "b"));
  CHECK(is_hamiltonian(k4e) == ham_by_permutations(k4e));
  CHECK(is_hamiltonian(k4e));
  CHECK(!is_hamiltonian(Graph{}));
  CHECK(!is_hamiltonian(gparse("a b")));
}

TEST_CASE("hamiltonicity agrees with the permutation oracle") {
  testutil::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = testutil::random_graph(rng, testutil::letters(int(3 + rng.next(4))), 45);
    CHECK(is_hamiltonian(g) == ham_by_permutations(g));
  }
}

TEST_CASE("planarity unit facts") {
  CHECK(!is_planar(k5()));
  CHECK(!is_planar(k33()));
  CHECK(is_planar(k5().without(Edge("a", "b"))));
  CHECK(is_planar(Graph{}));
}

TEST_CASE("planarity agrees with subdivision search up to 6 vertices") {
  // Exhaustive on 5 labels.
  auto labels5 = testutil::letters(5);
  std::vector<Edge> all5;
  for (std::size_t i = 0; i < labels5.size(); ++i)
    for (std::size_t j = i + 1; j < labels5.size(); ++j)
      all5.push_back(Edge(labels5[i], labels5[j]));
  for (std::uint32_t mask = 0; mask < (1u << all5.size()); ++mask) {
    Graph g;
    for (std::size_t b = 0; b < all5.size(); ++b)
      if (mask & (1u << b)) g.add(all5[b]);
    CHECK(is_planar(g) == planar_by_subdivision_search(g));
  }

  // Exhaustive on 6 labels.
  auto labels6 = testutil::letters(6);
  std::vector<Edge> all6;
  for (std::size_t i = 0; i < labels6.size(); ++i)
    for (std::size_t j = i + 1; j < labels6.size(); ++j)
      all6.push_back(Edge(labels6[i], labels6[j]));
  int nonplanar = 0;
  for (std::uint32_t mask = 0; mask < (1u << all6.size()); ++mask) {
    Graph g;
    for (std::size_t b = 0; b < all6.size(); ++b)
      if (mask & (1u << b)) g.add(all6[b]);
    bool bm = is_planar(g);
    if (!bm) ++nonplanar;
    REQUIRE(bm == planar_by_subdivision_search(g));
  }
  CHECK(nonplanar > 0);
}

TEST_CASE("planarity rejects graphs past the supported size") {
  Graph big;
  for (int i = 0; i < 17; ++i)
    big.add("v" + std::to_string(i), "v" + std::to_string((i + 1) % 17));
  CHECK_THROWS_AS(is_planar(big), Error);
}

TEST_CASE("subgraph containment") {
  CHECK(contains_subgraph(gparse("a b"), gparse("x y\ny z")));
  CHECK(!contains_subgraph(gparse("a b\nb c\na c"), testutil::cycle_graph(testutil::letters(4))));
  CHECK(!contains_subgraph(testutil::path_graph({"a", "b", "c", "d"}), gparse("c a\nc b\nc d")));
  CHECK(contains_subgraph(Graph{}, Graph{}));
  CHECK(!contains_subgraph(gparse("a b"), Graph{}));
}

TEST_CASE("subgraph containment is monotone under edge addition") {
  testutil::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Graph pattern = testutil::random_graph(rng, testutil::letters(3), 60);
    Graph g = testutil::random_graph(rng, testutil::letters(5), 35);
    Graph bigger = graph_union(g, testutil::random_graph(rng, testutil::letters(5), 20));
    if (contains_subgraph(pattern, g)) CHECK(contains_subgraph(pattern, bigger));
  }
}

TEST_CASE("coloring enumeration matches the worked examples") {
  auto single = enumerate_proper_colorings(gparse("a b"), 2);
  CHECK(single == std::set<ColoringPartition>{ColoringPartition{{{"a"}, {"b"}}}});

  CHECK(enumerate_proper_colorings(gparse("a b\nb c\na c"), 2).empty());

  auto path2 = enumerate_proper_colorings(gparse("a b\nb c"), 2);
  CHECK(path2 == std::set<ColoringPartition>{ColoringPartition{{{"a", "c"}, {"b"}}}});

  // The empty graph has exactly one good coloring: the empty partition.
  CHECK(enumerate_proper_colorings(Graph{}, 3) ==
        std::set<ColoringPartition>{ColoringPartition{}});
}

TEST_CASE("coloring family is nonempty exactly when the graph is colorable") {
  testutil::Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = testutil::random_graph(rng, testutil::letters(5), 50);
    int k = int(1 + rng.next(4));
    CHECK(!enumerate_proper_colorings(g, k).empty() == is_k_colorable(g, k));
  }
}

TEST_CASE("edge 2-colorability and profiles") {
  Graph c4 = testutil::cycle_graph(testutil::letters(4));
  CHECK(is_edge_2_colorable(c4));
  Edge2Profile p = edge2_profile(c4);
  CHECK(p.cycles == std::set<VertexSet>{{"a", "b", "c", "d"}});
  CHECK(p.path_odd.empty());

  CHECK(!is_edge_2_colorable(gparse("a b\nb c\na c")));
  CHECK(!is_edge_2_colorable(gparse("c a\nc b\nc d")));
  CHECK_THROWS_AS(edge2_profile(gparse("a b\nb c\na c")), Error);

  Edge2Profile q = edge2_profile(gparse("a b\nb c\nx y"));
  CHECK(q.path_odd.size() == 2);
  CHECK(q.path_odd.at({"a", "c"}) == false);  // two edges: even
  CHECK(q.path_odd.at({"x", "y"}) == true);   // one edge: odd
  CHECK(q.degrees.at("b") == 2);
}

TEST_CASE("cutset enumeration") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= 4; ++k)
      CHECK(cutsets_below(testutil::complete_graph(testutil::letters(n)), k).empty());

  CHECK(cutsets_below(gparse("a b\nb c"), 2) == std::set<VertexSet>{{"b"}});
  CHECK(cutsets_below(gparse("a b\nc d"), 1) == std::set<VertexSet>{{}});
  CHECK(cutsets_below(gparse("a b\nc d"), 2) == std::set<VertexSet>{{}});

  testutil::Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testutil::random_graph(rng, testutil::letters(5), 40);
    int k = int(1 + rng.next(3));
    auto small = cutsets_below(g, k);
    auto larger = cutsets_below(g, k + 1);
    CHECK(std::includes(larger.begin(), larger.end(), small.begin(), small.end()));
  }
}

TEST_CASE("k-connectivity") {
  Graph k4 = testutil::complete_graph(testutil::letters(4));
  CHECK(is_k_connected(k4, 3));
  CHECK(!is_k_connected(k4, 4));
  Graph c5 = testutil::cycle_graph(testutil::letters(5));
  CHECK(is_k_connected(c5, 2));
  CHECK(!is_k_connected(c5, 3));

  testutil::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testutil::random_graph(rng, testutil::letters(6), 50);
    for (int k = 2; k <= 4; ++k)
      if (is_k_connected(g, k)) CHECK(is_k_connected(g, k - 1));
  }
}

TEST_CASE("pattern classification drives the subgraph decider") {
  CHECK(classify_pattern(gparse("c a\nc b\nc d\nc e")) == StrongClass::Star);
  CHECK(classify_pattern(gparse("a b")) == StrongClass::Star);
  CHECK(classify_pattern(testutil::cycle_graph(testutil::letters(5))) == StrongClass::Cycle);
  CHECK(classify_pattern(gparse("a b\nb c\na c")) == StrongClass::Cycle);
  CHECK(classify_pattern(testutil::complete_graph(testutil::letters(4))) ==
        StrongClass::Complete);
  CHECK(classify_pattern(testutil::complete_graph(testutil::letters(5))) ==
        StrongClass::Complete);

  // Octahedron-like: 3-connected but not complete.
  Graph wheel;  // hub + 4-cycle
  for (const char* v : {"b", "c", "d", "e"}) wheel.add("a", v);
  wheel.add("b", "c").add("c", "d").add("d", "e").add("e", "b");
  CHECK(classify_pattern(wheel) == StrongClass::ThreeConnected);

  // Diamond: 2-connected, single 2-cutset {a,b} which is an edge.
  Graph diamond = testutil::complete_graph(testutil::letters(4)).without(Edge("c", "d"));
  CHECK(classify_pattern(diamond) == StrongClass::TwoConnCutsetEdges);

  CHECK(classify_pattern(testutil::path_graph(testutil::letters(4))) ==
        StrongClass::ThreeEdgePath);
  CHECK(classify_pattern(testutil::path_graph(testutil::letters(5))) ==
        StrongClass::NotStrongTree);
  CHECK(classify_pattern(gparse("a b\nb c\nb d\nd e\nd f")) == StrongClass::NotStrongTree);

  // Bowtie: two triangles sharing a cut vertex.
  CHECK(classify_pattern(gparse("a b\nb c\na c\nc d\nd e\nc e")) == StrongClass::UnknownClass);
  // Complete bipartite 2x3: a 2-cutset that is not an edge.
  Graph k23;
  for (const char* u : {"a", "b"})
    for (const char* v : {"x", "y", "z"}) k23.add(u, v);
  CHECK(classify_pattern(k23) == StrongClass::UnknownClass);
  CHECK(classify_pattern(gparse("a b\nc d")) == StrongClass::UnknownClass);

  CHECK_THROWS_AS(classify_pattern(Graph{}), Error);
}
