// Acceptance suite: one self-contained check per release criterion, each
// printed as a single pass/fail line with its runtime. Run all with no
// arguments or a single criterion by number.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "core/deciders.hpp"
#include "core/oracle.hpp"
#include "core/properties.hpp"
#include "core/setcore.hpp"
#include "core/witnesses.hpp"
#include "testutil.hpp"

using namespace strongequiv;
namespace sc = strongequiv::setcore;
using testutil::Rng;

namespace {

std::vector<Graph> all_graphs(int vertices) {
  auto labels = testutil::letters(vertices);
  std::vector<Edge> edges;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) edges.push_back(Edge(labels[i], labels[j]));
  std::vector<Graph> out;
  out.reserve(std::size_t(1) << edges.size());
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    Graph g;
    for (std::size_t b = 0; b < edges.size(); ++b)
      if (mask & (1u << b)) g.add(edges[b]);
    out.push_back(std::move(g));
  }
  return out;
}

bool fail_note(const char* message) {
  std::printf("      %s\n", message);
  return false;
}

template <typename First, typename... Rest>
bool fail_note(const char* format, First first, Rest... rest) {
  std::printf("      ");
  std::printf(format, first, rest...);
  std::printf("\n");
  return false;
}

// --- criterion 1: threshold characterization, exhaustively ------------------

bool criterion1() {
  sc::FiniteUniverse u({"a", "b", "c"});
  for (std::uint32_t choice = 0; choice < 256; ++choice) {
    std::set<sc::SubsetMask> members;
    for (sc::SubsetMask s = 0; s < 8; ++s)
      if (choice & (1u << s)) members.insert(s);
    sc::SubsetProperty prop(u, members);
    sc::RelationTable rel = sc::equiv_from_property(prop);
    bool fixed = sc::bounded_strengthen(rel) == rel;
    bool threshold =
        sc::classify_threshold_form(prop).kind != sc::ThresholdForm::Kind::Neither;
    if (fixed != threshold)
      return fail_note("property %u: fixed=%d threshold=%d", choice, fixed, threshold);
  }
  return true;
}

// --- criterion 2: strengthening laws on random relations --------------------

sc::RelationTable random_relation(const sc::FiniteUniverse& u, Rng& rng) {
  sc::SubsetMask count = u.subset_count();
  std::vector<sc::SubsetMask> rep(count);
  sc::SubsetMask buckets = sc::SubsetMask(1 + rng.next(count));
  for (sc::SubsetMask s = 0; s < count; ++s) rep[s] = sc::SubsetMask(rng.next(buckets));
  return sc::RelationTable::from_representatives(u, std::move(rep));
}

sc::RelationTable coarsen(const sc::RelationTable& rel, Rng& rng) {
  sc::SubsetMask count = rel.universe().subset_count();
  std::vector<sc::SubsetMask> rep(count);
  sc::SubsetMask buckets = sc::SubsetMask(1 + rng.next(count));
  for (sc::SubsetMask s = 0; s < count; ++s)
    rep[s] = sc::SubsetMask(rel.representative(s) % buckets);
  return sc::RelationTable::from_representatives(rel.universe(), std::move(rep));
}

sc::RelationTable between(const sc::RelationTable& a, const sc::RelationTable& a_s,
                          Rng& rng) {
  sc::SubsetMask count = a.universe().subset_count();
  std::map<std::pair<sc::SubsetMask, sc::SubsetMask>, sc::SubsetMask> cls;
  std::map<sc::SubsetMask, sc::SubsetMask> group;
  std::vector<sc::SubsetMask> rep(count);
  for (sc::SubsetMask s = 0; s < count; ++s) {
    auto [git, gnew] = group.try_emplace(a_s.representative(s), sc::SubsetMask(rng.next(2)));
    auto [it, fresh] = cls.try_emplace({a.representative(s), git->second}, s);
    rep[s] = it->second;
  }
  return sc::RelationTable::from_representatives(a.universe(), std::move(rep));
}

bool criterion2() {
  sc::FiniteUniverse u({"a", "b", "c", "d"});
  sc::SubsetMask count = u.subset_count();
  Rng rng(20240801);
  for (int trial = 0; trial < 200; ++trial) {
    sc::RelationTable a = random_relation(u, rng);
    sc::RelationTable a_s = sc::bounded_strengthen(a);

    // An equivalence relation: the canonical table maps everything onto a
    // fixed representative of its own class.
    for (sc::SubsetMask s = 0; s < count; ++s) {
      if (a_s.representative(a_s.representative(s)) != a_s.representative(s) ||
          a_s.representative(s) > s)
        return fail_note("trial %d: malformed strengthened table", trial);
    }

    if (!a_s.refines(a)) return fail_note("trial %d: not a refinement", trial);

    for (sc::SubsetMask g = 0; g < count; ++g)
      for (sc::SubsetMask h = g + 1; h < count; ++h) {
        if (!a_s.related(g, h)) continue;
        for (sc::SubsetMask f = 0; f < count; ++f)
          if (!a_s.related(g | f, h | f))
            return fail_note("trial %d: congruence broken", trial);
      }

    sc::RelationTable b = coarsen(a, rng);
    if (!a_s.refines(sc::bounded_strengthen(b)))
      return fail_note("trial %d: monotonicity broken", trial);

    if (!(sc::bounded_strengthen(a_s) == a_s))
      return fail_note("trial %d: not idempotent", trial);

    sc::RelationTable m1 = between(a, a_s, rng);
    sc::RelationTable m2 = between(a, a_s, rng);
    if (!(sc::bounded_strengthen(m1) == a_s) || !(sc::bounded_strengthen(m2) == a_s))
      return fail_note("trial %d: sandwiched relation has a different strengthening", trial);
    if (!(sc::bounded_strengthen(sc::RelationTable::intersect(m1, m2)) == a_s))
      return fail_note("trial %d: intersection law broken", trial);
    if (!a_s.refines(m1))
      return fail_note("trial %d: strengthening is not the most precise", trial);
  }
  return true;
}

// --- criterion 3: hamiltonian identity over all 4-vertex graphs -------------

bool criterion3() {
  oracle::CrosscheckReport report = oracle::crosscheck(
      PropertySelector::hamiltonian(), {4, 0, 0}, {2, 0, std::uint64_t(1) << 22});
  if (!report.clean())
    return fail_note("%zu violation(s), first: %s", report.violations.size(),
                     report.violations.front().c_str());
  if (report.pairs != 2080 || report.equivalent != 64 || report.not_equivalent != 2016 ||
      report.unknown != 0)
    return fail_note("verdict counts off: pairs=%llu eq=%llu ne=%llu unk=%llu",
                     (unsigned long long)report.pairs, (unsigned long long)report.equivalent,
                     (unsigned long long)report.not_equivalent,
                     (unsigned long long)report.unknown);
  return true;
}

// --- criterion 4: k-connectivity families, conn2 and phi/psi agreement ------

bool criterion4() {
  std::vector<Graph> graphs = all_graphs(4);
  for (int k = 1; k <= 2; ++k) {
    PropertySelector phi = PropertySelector::kconn(k);
    PropertySelector psi = PropertySelector::kconn_psi(k);
    oracle::OracleBudget budget{2, 0, 0};

    oracle::CrosscheckReport phi_report = oracle::crosscheck(phi, {4, 0, 0}, budget);
    if (!phi_report.clean())
      return fail_note("k=%d: %zu violation(s), first: %s", k,
                       phi_report.violations.size(), phi_report.violations.front().c_str());

    oracle::CrosscheckReport psi_report = oracle::crosscheck(psi, {4, 0, 0}, budget);
    if (!psi_report.clean())
      return fail_note("k=%d psi: %zu violation(s), first: %s", k,
                       psi_report.violations.size(), psi_report.violations.front().c_str());
    if (psi_report.equivalent != phi_report.equivalent ||
        psi_report.not_equivalent != phi_report.not_equivalent)
      return fail_note("k=%d: phi and psi verdict counts differ", k);

    // Equivalent pairs keep identical small-cutset families under shared
    // extensions.
    std::vector<std::pair<const Graph*, const Graph*>> equivalent;
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = i; j < graphs.size(); ++j)
        if (deciders::decide_kconnectivity(graphs[i], graphs[j], k).verdict ==
            Verdict::Equivalent)
          equivalent.push_back({&graphs[i], &graphs[j]});

    Rng rng(777 + k);
    auto extension_labels = testutil::letters(4);
    extension_labels.push_back("_0");
    extension_labels.push_back("_1");
    for (int pick = 0; pick < 100; ++pick) {
      auto [g, h] = equivalent[rng.next(equivalent.size())];
      for (int s = 0; s < 20; ++s) {
        Graph f = testutil::random_graph(rng, extension_labels, 30);
        if (properties::cutsets_below(graph_union(*g, f), k) !=
            properties::cutsets_below(graph_union(*h, f), k))
          return fail_note("k=%d: cutset families diverged under an extension", k);
      }
    }
  }
  return true;
}

// --- criterion 5: coloring fast path and the colorability reduction ---------

bool criterion5() {
  std::vector<Graph> graphs4 = all_graphs(4);
  for (std::size_t i = 0; i < graphs4.size(); ++i)
    for (std::size_t j = i; j < graphs4.size(); ++j) {
      bool fast = deciders::decide_kcolor(graphs4[i], graphs4[j], 2).verdict ==
                  Verdict::Equivalent;
      if (fast != deciders::kcolor_families_equal(graphs4[i], graphs4[j], 2))
        return fail_note("fast path mismatch on 4-vertex pair %zu,%zu", i, j);
    }

  std::vector<Graph> graphs5 = all_graphs(5);
  Rng rng(20240805);
  for (int trial = 0; trial < 3000; ++trial) {
    const Graph& g = graphs5[rng.next(graphs5.size())];
    const Graph& h = graphs5[rng.next(graphs5.size())];
    bool fast = deciders::decide_kcolor(g, h, 2).verdict == Verdict::Equivalent;
    if (fast != deciders::kcolor_families_equal(g, h, 2))
      return fail_note("fast path mismatch on a sampled 5-vertex pair (trial %d)", trial);
  }

  for (const Graph& gprime : graphs4) {
    if (gprime.empty()) continue;
    auto [g, h] = deciders::np_reduce_kcolor(gprime, 3);
    bool colorable = properties::is_k_colorable(gprime, 3);
    bool separated = deciders::decide_kcolor(g, h, 3).verdict == Verdict::NotEquivalent;
    if (colorable != separated)
      return fail_note("reduction guarantee broken on %s",
                       oracle::compact(gprime).c_str());
  }
  return true;
}

// --- criterion 6: edge 2-colorability against the bounded oracle ------------

bool criterion6() {
  oracle::CrosscheckReport report =
      oracle::crosscheck(PropertySelector::edge2color(), {4, 0, 0}, {2, 0, 0});
  if (!report.clean())
    return fail_note("%zu violation(s), first: %s", report.violations.size(),
                     report.violations.front().c_str());
  return true;
}

// --- criterion 7: planarity witnesses across all small planar pairs ---------

bool criterion7() {
  Graph k5 = testutil::complete_graph(testutil::letters(5));
  Graph k33;
  for (const char* u : {"a", "b", "c"})
    for (const char* v : {"x", "y", "z"}) k33.add(u, v);
  if (properties::is_planar(k5) || properties::is_planar(k33) ||
      !properties::is_planar(k5.without(Edge("a", "b"))))
    return fail_note("planarity unit facts failed");

  PropertySelector pl = PropertySelector::planarity();
  std::vector<Graph> graphs = all_graphs(5);
  std::vector<const Graph*> planar;
  for (const Graph& g : graphs)
    if (properties::is_planar(g)) planar.push_back(&g);
  if (planar.size() != 1023) return fail_note("expected 1023 planar graphs on 5 labels");

  for (std::size_t i = 0; i < planar.size(); ++i) {
    for (std::size_t j = i + 1; j < planar.size(); ++j) {
      try {
        auto w = witnesses::witness_for(pl, *planar[i], *planar[j]);
        if (!w || !witnesses::verify_witness(pl, *planar[i], *planar[j], w->extension))
          return fail_note("witness missing or rejected for pair %zu,%zu", i, j);
      } catch (const Error& e) {
        return fail_note("witness construction failed for pair %zu,%zu: %s", i, j,
                         e.what());
      }
    }
  }

  // The non-planar side on 5 labels is K5 alone; its self-pair must exhaust
  // even under a reduced budget.
  oracle::Refutation r = oracle::refute_bounded(pl, k5, k5, {1, 3, 0});
  if (r.kind != oracle::RefutationKind::ExhaustedAbsent)
    return fail_note("non-planar pair did not exhaust");
  return true;
}

// --- criterion 8: subgraph-pattern gadgets on seeded hosts -------------------

bool criterion8() {
  struct Family {
    Graph pattern;
    int vertices;
    int percent;
  };
  std::vector<Family> families{
      {Graph::parse("c a\nc b\nc d"), 5, 25},                    // star with 3 edges
      {testutil::cycle_graph(testutil::letters(4)), 6, 20},      // 4-cycle
      {testutil::cycle_graph(testutil::letters(5)), 6, 25},      // 5-cycle
      {testutil::complete_graph(testutil::letters(4)), 6, 40},   // K4
      {testutil::complete_graph(testutil::letters(5)), 7, 50},   // K5
      {testutil::path_graph(testutil::letters(4)), 6, 12},       // 3-edge path
  };
  Rng rng(20240808);
  for (std::size_t fam = 0; fam < families.size(); ++fam) {
    const Family& family = families[fam];
    PropertySelector prop = PropertySelector::subgraph(family.pattern);
    int accepted = 0;
    int attempts = 0;
    while (accepted < 50) {
      if (++attempts > 200000)
        return fail_note("family %zu: host generation stalled", fam);
      Graph g = testutil::random_graph(rng, testutil::letters(family.vertices),
                                       family.percent);
      if (g.empty() || properties::contains_subgraph(family.pattern, g)) continue;
      ++accepted;
      for (const Edge& e : g.edges()) {
        Graph ge = g.without(e);
        try {
          auto w = witnesses::witness_for(prop, g, ge);
          if (!w || !witnesses::verify_witness(prop, g, ge, w->extension))
            return fail_note("family %zu: witness rejected on %s minus %s-%s", fam,
                             oracle::compact(g).c_str(), e.u().c_str(), e.v().c_str());
        } catch (const Error& err) {
          return fail_note("family %zu: witness failed on %s minus %s-%s: %s", fam,
                           oracle::compact(g).c_str(), e.u().c_str(), e.v().c_str(),
                           err.what());
        }
      }
    }
  }

  // A 4-edge path is outside the characterized classes: pairs that both
  // contain it stay undecided.
  Graph p4 = testutil::path_graph(testutil::letters(5));
  Graph k5 = testutil::complete_graph(testutil::letters(5));
  if (deciders::decide_subgraph(p4, k5, k5.without(Edge("a", "b"))).verdict !=
      Verdict::Unknown)
    return fail_note("4-edge-path pattern did not yield Unknown");
  return true;
}

// --- criterion 9: minimum 2-equivalent subgraphs are hamiltonian cycles -----

bool criterion9() {
  std::vector<Graph> family;
  for (int n = 4; n <= 7; ++n) family.push_back(testutil::cycle_graph(testutil::letters(n)));
  for (int n = 4; n <= 7; ++n)
    family.push_back(testutil::complete_graph(testutil::letters(n)));
  Graph k33;
  for (const char* u : {"a", "b", "c"})
    for (const char* v : {"x", "y", "z"}) k33.add(u, v);
  family.push_back(k33);
  Graph prism = testutil::cycle_graph(testutil::letters(6));
  prism.add("a", "d").add("b", "e").add("c", "f");
  family.push_back(prism);
  for (int rim = 5; rim <= 6; ++rim) {  // wheels
    auto labels = testutil::letters(rim + 1);
    Graph wheel = testutil::cycle_graph({labels.begin() + 1, labels.end()});
    for (int i = 1; i <= rim; ++i) wheel.add(labels[0], labels[i]);
    family.push_back(wheel);
  }

  for (const Graph& g : family) {
    if (!properties::is_k_connected(g, 2) || !properties::is_hamiltonian(g))
      return fail_note("family member %s is not 2-connected hamiltonian",
                       oracle::compact(g).c_str());
    deciders::MinSubgraphResult r = deciders::min_equivalent_subgraph(g, 2, 500000);
    if (r.budget_exceeded || !r.subgraph)
      return fail_note("budget exceeded on %s", oracle::compact(g).c_str());
    const Graph& sub = *r.subgraph;
    if (sub.edge_count() != g.vertex_count())
      return fail_note("%s: expected %zu edges, got %zu", oracle::compact(g).c_str(),
                       g.vertex_count(), sub.edge_count());
    bool cycle_shape = sub.vertices() == g.vertices() &&
                       components(sub).size() == 1 && sub.is_subgraph_of(g);
    for (const VertexLabel& v : sub.vertices())
      cycle_shape = cycle_shape && sub.degree(v) == 2;
    if (!cycle_shape)
      return fail_note("%s: result is not a spanning cycle", oracle::compact(g).c_str());
    if (deciders::decide_kconnectivity(g, sub, 2).verdict != Verdict::Equivalent)
      return fail_note("%s: result not equivalent", oracle::compact(g).c_str());
  }
  return true;
}

struct Criterion {
  int number;
  const char* label;
  double limit_seconds;
  std::function<bool()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria{
      {1, "threshold characterization over a 3-element universe", 10, criterion1},
      {2, "strengthening laws on 200 random relations", 60, criterion2},
      {3, "hamiltonian identity with witnesses and oracle exhaustion", 300, criterion3},
      {4, "k-connectivity crosscheck, cutset families, phi/psi agreement", 600, criterion4},
      {5, "2-coloring fast path and colorability reduction", 300, criterion5},
      {6, "edge-2-colorability decider against the bounded oracle", 300, criterion6},
      {7, "planarity witnesses across all small planar pairs", 600, criterion7},
      {8, "subgraph-pattern gadgets on seeded hosts", 300, criterion8},
      {9, "minimum 2-equivalent subgraphs are hamiltonian cycles", 300, criterion9},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.number != only) continue;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::printf("      unexpected exception: %s\n", e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds < c.limit_seconds;
    if (!in_time) std::printf("      over the %.0fs limit\n", c.limit_seconds);
    bool pass = ok && in_time;
    std::printf("%s criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", c.number,
                c.label, seconds);
    if (!pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
