#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "core/decision.hpp"
#include "core/graph.hpp"

namespace strongequiv::deciders {

// One decision procedure per characterized relation. Every decider answers
// whether g and h stay equivalent under all common extensions.
DecisionOutcome decide_hamiltonian(const Graph& g, const Graph& h);
DecisionOutcome decide_planarity(const Graph& g, const Graph& h);
DecisionOutcome decide_subgraph(const Graph& pattern, const Graph& g, const Graph& h);
DecisionOutcome decide_kcolor(const Graph& g, const Graph& h, int k);
DecisionOutcome decide_edge2color(const Graph& g, const Graph& h);
DecisionOutcome decide_kconnectivity(const Graph& g, const Graph& h, int k);

DecisionOutcome decide(const PropertySelector& prop, const Graph& g, const Graph& h);

// The enumeration route behind decide_kcolor, exposed so the k <= 2 fast
// paths can be checked against it.
bool kcolor_families_equal(const Graph& g, const Graph& h, int k);

// Instance reduction: from any nonempty gPrime builds a pair (G, H) such
// that gPrime is k-colorable iff decide_kcolor(G, H, k) is NotEquivalent.
std::pair<Graph, Graph> np_reduce_kcolor(const Graph& gprime, int k);

struct MinSubgraphResult {
  std::optional<Graph> subgraph;  // absent when the budget ran out
  std::uint64_t candidates_examined = 0;
  bool budget_exceeded = false;
};

// Smallest (by edge count) subgraph of g equivalent to g under the
// k-connectivity relation. Enumerates edge subsets in increasing
// cardinality; the budget caps examined candidates.
MinSubgraphResult min_equivalent_subgraph(const Graph& g, int k, std::uint64_t budget);

}  // namespace strongequiv::deciders
