#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "core/errors.hpp"

namespace strongequiv {

// Vertices are plain text tokens without whitespace. Labels starting with
// "_" are reserved for generated fresh vertices.
using VertexLabel = std::string;
using VertexSet = std::set<VertexLabel>;

// An unordered pair of distinct vertices, stored with endpoints in
// lexicographic order so that edge sets have one canonical form.
class Edge {
public:
  Edge(VertexLabel a, VertexLabel b);

  const VertexLabel& u() const { return u_; }
  const VertexLabel& v() const { return v_; }

  auto operator<=>(const Edge&) const = default;

private:
  VertexLabel u_, v_;  // u_ < v_
};

// A finite graph as a set of edges. The vertex set is implicit (all edge
// endpoints), so this type cannot represent isolated vertices.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::set<Edge> edges) : edges_(std::move(edges)) {}

  static Graph parse(std::string_view text);
  std::string serialize() const;

  const std::set<Edge>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }
  std::size_t edge_count() const { return edges_.size(); }

  VertexSet vertices() const;
  std::size_t vertex_count() const { return vertices().size(); }

  bool contains(const Edge& e) const { return edges_.count(e) > 0; }
  bool contains(const VertexLabel& v) const;
  std::size_t degree(const VertexLabel& v) const;
  std::vector<VertexLabel> neighbors(const VertexLabel& v) const;

  Graph& add(const Edge& e) { edges_.insert(e); return *this; }
  Graph& add(const VertexLabel& a, const VertexLabel& b) { return add(Edge(a, b)); }
  Graph without(const Edge& e) const;

  bool is_subgraph_of(const Graph& host) const;

  auto operator<=>(const Graph&) const = default;

private:
  std::set<Edge> edges_;
};

// Set-theoretic union of edge sets.
Graph graph_union(const Graph& g, const Graph& h);

// The vertex sets of a graph's connected components; parts are pairwise
// disjoint and cover the graph's vertex set.
using ComponentFamily = std::set<VertexSet>;

// A graph with an explicit vertex set. Isolated vertices are permitted;
// this is the type of vertex-deletion results, where stranded vertices
// count as singleton components.
struct LabeledGraph {
  VertexSet vertices;
  std::set<Edge> edges;

  ComponentFamily components() const;
};

ComponentFamily components(const Graph& g);

// Deletes the vertices in c from g and returns the component family of the
// remainder. Vertices isolated by the deletion appear as singleton parts.
ComponentFamily components_after_deletion(const Graph& g, const VertexSet& c);

// Deterministically yields `count` distinct labels "_0", "_1", ... skipping
// any label present in `avoid`.
std::vector<VertexLabel> fresh_vertices(std::size_t count, const VertexSet& avoid);

Graph build_complete(const VertexSet& vertices);
Graph build_complete_multipartite(const std::vector<VertexSet>& blocks);

}  // namespace strongequiv
