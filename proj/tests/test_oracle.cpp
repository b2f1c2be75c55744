#include "doctest.h"

#include "core/deciders.hpp"
#include "core/oracle.hpp"
#include "core/properties.hpp"
#include "core/witnesses.hpp"
#include "testutil.hpp"

using namespace strongequiv;
using namespace strongequiv::oracle;
using testutil::gparse;

namespace {

Graph k(int n) { return testutil::complete_graph(testutil::letters(n)); }

}  // namespace

TEST_CASE("refutation finds the empty extension on base differences") {
  PropertySelector ham = PropertySelector::hamiltonian();
  Refutation r = refute_bounded(ham, k(3), k(3).without(Edge("a", "b")), {0, 0, 0});
  REQUIRE(r.kind == RefutationKind::Separated);
  CHECK(*r.separating == Graph{});
  CHECK(r.candidates_tried == 1);
}

TEST_CASE("identical graphs exhaust without a refutation") {
  PropertySelector ham = PropertySelector::hamiltonian();
  Graph g = gparse("a b\nb c");
  Refutation r = refute_bounded(ham, g, g, {2, 0, 0});
  CHECK(r.kind == RefutationKind::ExhaustedAbsent);
  CHECK(!r.separating.has_value());
}

TEST_CASE("cut-pair instance: oracle and hand anchor agree") {
  Graph g = gparse("a x\nx b");
  Graph h = gparse("a x\nx b\nx y");
  PropertySelector k2 = PropertySelector::kconn(2);
  CHECK(witnesses::verify_witness(k2, g, h, gparse("a w\nb w")));
  Refutation r = refute_bounded(k2, g, h, {2, 0, 0});
  REQUIRE(r.kind == RefutationKind::Separated);
  CHECK(witnesses::verify_witness(k2, g, h, *r.separating));
}

TEST_CASE("refutations are deterministic and verified") {
  testutil::Rng rng(808);
  std::vector<PropertySelector> props{
      PropertySelector::hamiltonian(), PropertySelector::edge2color(),
      PropertySelector::kconn(2), PropertySelector::kcolor(2)};
  int separated = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const PropertySelector& prop = props[trial % props.size()];
    Graph g = testutil::random_graph(rng, testutil::letters(4), 45);
    Graph h = testutil::random_graph(rng, testutil::letters(4), 45);
    OracleBudget budget{2, 3, 0};
    Refutation first = refute_bounded(prop, g, h, budget);
    Refutation second = refute_bounded(prop, g, h, budget);
    CHECK(first.kind == second.kind);
    if (first.kind == RefutationKind::Separated) {
      ++separated;
      CHECK(*first.separating == *second.separating);
      CHECK(witnesses::verify_witness(prop, g, h, *first.separating));
    }
  }
  CHECK(separated > 20);
}

TEST_CASE("candidate caps are reported as budget, not absence") {
  PropertySelector ham = PropertySelector::hamiltonian();
  Graph g = gparse("a b\nb c");
  Refutation r = refute_bounded(ham, g, g, {2, 0, 5});
  CHECK(r.kind == RefutationKind::BudgetExceeded);
  CHECK(r.candidates_tried == 5);
}

TEST_CASE("pools past the dense limit are rejected") {
  Graph big;
  for (int i = 0; i < 15; ++i)
    big.add("v" + std::to_string(i), "v" + std::to_string(i + 1));
  CHECK_THROWS_AS(refute_bounded(PropertySelector::hamiltonian(), big, Graph{}, {4, 0, 0}),
                  Error);
}

TEST_CASE("crosschecks stay clean on small exhaustive families") {
  OracleBudget budget{2, 0, 0};
  CrosscheckReport ham = crosscheck(PropertySelector::hamiltonian(), {3, 0, 0}, budget);
  CHECK(ham.clean());
  CHECK(ham.pairs == 36);
  CHECK(ham.equivalent == 8);  // identity relation: diagonal only
  CHECK(ham.not_equivalent == 28);

  CrosscheckReport e2c = crosscheck(PropertySelector::edge2color(), {3, 0, 0}, budget);
  CHECK(e2c.clean());

  CrosscheckReport sampled =
      crosscheck(PropertySelector::kconn(2), {4, 250, 4242}, budget, true);
  CHECK(sampled.clean());
  CHECK(sampled.pairs == 250);
  CHECK(sampled.records.size() == 250);

  CrosscheckReport colors = crosscheck(PropertySelector::kcolor(3), {4, 150, 99}, budget);
  CHECK(colors.clean());

  std::string text = ham.render_text();
  CHECK(text.find("violations=0") != std::string::npos);
}

TEST_CASE("sampled 5-vertex pairs stay clean under 2-connectivity") {
  CrosscheckReport report =
      crosscheck(PropertySelector::kconn(2), {5, 30, 2025}, {2, 0, 0});
  CHECK(report.clean());
  CHECK(report.pairs == 30);
}

TEST_CASE("complete-graph criterion separates hamiltonian pairs everywhere") {
  CompleteCriterionReport r =
      complete_graph_criterion(PropertySelector::hamiltonian(), 5, {-1, 0, 0});
  CHECK(r.all_separated);
  CHECK(r.entries.size() == 4);
  for (const auto& e : r.entries)
    CHECK(witnesses::verify_witness(
        PropertySelector::hamiltonian(),
        testutil::complete_graph(testutil::letters(e.vertices)),
        testutil::complete_graph(testutil::letters(e.vertices))
            .without(*testutil::complete_graph(testutil::letters(e.vertices)).edges().begin()),
        *e.separating));
}

TEST_CASE("complete-graph criterion under other properties") {
  CompleteCriterionReport colors =
      complete_graph_criterion(PropertySelector::kcolor(2), 3, {2, 0, 0});
  REQUIRE(colors.entries.size() == 2);
  CHECK(colors.entries[1].vertices == 3);
  CHECK(colors.entries[1].kind == RefutationKind::Separated);
  CHECK(*colors.entries[1].separating == Graph{});  // base difference at K3

  CompleteCriterionReport planar =
      complete_graph_criterion(PropertySelector::planarity(), 4, {3, 0, 0});
  CHECK(planar.all_separated);  // planar pairs split by completing towards K5
}

TEST_CASE("a non-planar pair is equivalent with bounded exhaustion") {
  Graph k5 = k(5);
  Graph k33;
  for (const char* u : {"a", "b", "c"})
    for (const char* v : {"x", "y", "z"}) k33.add(u, v);
  PropertySelector pl = PropertySelector::planarity();
  CHECK(deciders::decide(pl, k5, k33).verdict == Verdict::Equivalent);
  Refutation r = refute_bounded(pl, k5, k33, {1, 3, 0});
  CHECK(r.kind == RefutationKind::ExhaustedAbsent);
}
