#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "core/decision.hpp"
#include "core/graph.hpp"

namespace strongequiv::properties {

// A good k-coloring: partition of the graph's vertex set into at most k
// nonempty blocks, none of which contains an edge. Canonical form: a set of
// blocks (sets order themselves by smallest member).
struct ColoringPartition {
  std::set<VertexSet> blocks;
  auto operator<=>(const ColoringPartition&) const = default;
};

// Shape data of an edge-2-colorable graph: path components keyed by their
// endpoint pair with the parity of their length, cycle components by vertex
// set, plus all vertex degrees.
struct Edge2Profile {
  std::map<std::pair<VertexLabel, VertexLabel>, bool> path_odd;  // endpoints -> odd length?
  std::set<VertexSet> cycles;
  std::map<VertexLabel, std::size_t> degrees;
};

enum class StrongClass {
  Star,
  Cycle,
  TwoConnCutsetEdges,
  ThreeConnected,
  Complete,
  ThreeEdgePath,
  NotStrongTree,
  UnknownClass,
};

const char* strong_class_name(StrongClass c);

bool is_hamiltonian(const Graph& g);

// Exact planar-embedding test; graphs above 16 vertices are rejected with
// TooLarge.
bool is_planar(const Graph& g);

// Subgraph containment (not induced): some injective vertex mapping sends
// every pattern edge to an edge of g.
bool contains_subgraph(const Graph& pattern, const Graph& g);

std::set<ColoringPartition> enumerate_proper_colorings(const Graph& g, int k);
bool is_k_colorable(const Graph& g, int k);

bool is_edge_2_colorable(const Graph& g);
Edge2Profile edge2_profile(const Graph& g);  // NotEdge2Colorable when it isn't

// All cutsets of cardinality smaller than k. The empty set qualifies iff
// the graph is disconnected; a nonempty C qualifies iff some pair of
// vertices connected in g is disconnected in g-C.
std::set<VertexSet> cutsets_below(const Graph& g, int k);

bool is_k_connected(const Graph& g, int k);

// Dispatch order: Star, Cycle, Complete, ThreeConnected, TwoConnCutsetEdges,
// ThreeEdgePath, NotStrongTree, UnknownClass; first match wins.
StrongClass classify_pattern(const Graph& h);

// The strong-equivalence machinery treats these classes uniformly: both
// inputs have the property, or they are equal.
bool strong_class_is_characterized(StrongClass c);

// Evaluates the selector's property (see PropertySelector for the table).
bool holds(const PropertySelector& prop, const Graph& g);

}  // namespace strongequiv::properties
