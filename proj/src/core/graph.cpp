#include "core/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace strongequiv {

Edge::Edge(VertexLabel a, VertexLabel b) {
  if (a == b) fail(ErrorCode::LoopEdge, "loop edge at vertex '" + a + "'");
  if (a.empty() || b.empty()) fail(ErrorCode::MalformedLine, "empty vertex label");
  if (b < a) std::swap(a, b);
  u_ = std::move(a);
  v_ = std::move(b);
}

Graph Graph::parse(std::string_view text) {
  std::set<Edge> edges;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().starts_with("#")) continue;
    if (tokens.size() != 2)
      fail(ErrorCode::MalformedLine,
           "line " + std::to_string(lineno) + ": expected 'u v', got " +
               std::to_string(tokens.size()) + " token(s)");
    if (tokens[0] == tokens[1])
      fail(ErrorCode::LoopEdge,
           "line " + std::to_string(lineno) + ": loop edge at vertex '" + tokens[0] + "'");
    edges.insert(Edge(tokens[0], tokens[1]));
  }
  return Graph(std::move(edges));
}

std::string Graph::serialize() const {
  std::string out;
  for (const Edge& e : edges_) {
    out += e.u();
    out += ' ';
    out += e.v();
    out += '\n';
  }
  return out;
}

VertexSet Graph::vertices() const {
  VertexSet vs;
  for (const Edge& e : edges_) {
    vs.insert(e.u());
    vs.insert(e.v());
  }
  return vs;
}

bool Graph::contains(const VertexLabel& v) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const Edge& e) { return e.u() == v || e.v() == v; });
}

std::size_t Graph::degree(const VertexLabel& v) const {
  std::size_t d = 0;
  for (const Edge& e : edges_)
    if (e.u() == v || e.v() == v) ++d;
  return d;
}

std::vector<VertexLabel> Graph::neighbors(const VertexLabel& v) const {
  std::vector<VertexLabel> ns;
  for (const Edge& e : edges_) {
    if (e.u() == v) ns.push_back(e.v());
    else if (e.v() == v) ns.push_back(e.u());
  }
  return ns;
}

Graph Graph::without(const Edge& e) const {
  std::set<Edge> es = edges_;
  es.erase(e);
  return Graph(std::move(es));
}

bool Graph::is_subgraph_of(const Graph& host) const {
  return std::includes(host.edges().begin(), host.edges().end(),
                       edges_.begin(), edges_.end());
}

Graph graph_union(const Graph& g, const Graph& h) {
  std::set<Edge> es = g.edges();
  es.insert(h.edges().begin(), h.edges().end());
  return Graph(std::move(es));
}

ComponentFamily LabeledGraph::components() const {
  std::map<VertexLabel, const VertexLabel*> parent;
  for (const VertexLabel& v : vertices) parent[v] = nullptr;

  // Union-find over the explicit vertex set; untouched vertices stay
  // singletons.
  std::map<VertexLabel, VertexLabel> root;
  for (const VertexLabel& v : vertices) root[v] = v;
  auto find = [&](VertexLabel v) {
    while (root[v] != v) v = root[v];
    return v;
  };
  for (const Edge& e : edges) {
    VertexLabel ru = find(e.u());
    VertexLabel rv = find(e.v());
    if (ru != rv) root[rv] = ru;
  }

  std::map<VertexLabel, VertexSet> parts;
  for (const VertexLabel& v : vertices) parts[find(v)].insert(v);
  ComponentFamily family;
  for (auto& [r, part] : parts) family.insert(std::move(part));
  return family;
}

ComponentFamily components(const Graph& g) {
  return LabeledGraph{g.vertices(), g.edges()}.components();
}

ComponentFamily components_after_deletion(const Graph& g, const VertexSet& c) {
  VertexSet vs = g.vertices();
  for (const VertexLabel& v : c)
    if (!vs.count(v))
      fail(ErrorCode::ForeignVertex, "vertex '" + v + "' not in the graph");

  LabeledGraph rest;
  for (const VertexLabel& v : vs)
    if (!c.count(v)) rest.vertices.insert(v);
  for (const Edge& e : g.edges())
    if (!c.count(e.u()) && !c.count(e.v())) rest.edges.insert(e);
  return rest.components();
}

std::vector<VertexLabel> fresh_vertices(std::size_t count, const VertexSet& avoid) {
  std::vector<VertexLabel> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    VertexLabel v = "_" + std::to_string(i);
    if (!avoid.count(v)) out.push_back(std::move(v));
  }
  return out;
}

Graph build_complete(const VertexSet& vertices) {
  if (vertices.size() < 2)
    fail(ErrorCode::DegenerateSpec, "complete graph needs at least 2 vertices");
  Graph g;
  for (auto it = vertices.begin(); it != vertices.end(); ++it)
    for (auto jt = std::next(it); jt != vertices.end(); ++jt)
      g.add(*it, *jt);
  return g;
}

Graph build_complete_multipartite(const std::vector<VertexSet>& blocks) {
  if (blocks.size() < 2)
    fail(ErrorCode::DegenerateSpec, "complete multipartite graph needs at least 2 blocks");
  VertexSet seen;
  for (const VertexSet& b : blocks) {
    if (b.empty())
      fail(ErrorCode::DegenerateSpec, "complete multipartite graph: empty block");
    for (const VertexLabel& v : b) {
      if (!seen.insert(v).second)
        fail(ErrorCode::DegenerateSpec,
             "complete multipartite graph: blocks overlap at '" + v + "'");
    }
  }
  Graph g;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      for (const VertexLabel& a : blocks[i])
        for (const VertexLabel& b : blocks[j]) g.add(a, b);
  return g;
}

}  // namespace strongequiv
