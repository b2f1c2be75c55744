#include "core/properties.hpp"

#include <algorithm>

#include "core/dense.hpp"

namespace strongequiv::properties {

const char* strong_class_name(StrongClass c) {
  switch (c) {
    case StrongClass::Star: return "star";
    case StrongClass::Cycle: return "cycle";
    case StrongClass::TwoConnCutsetEdges: return "two-connected-cutset-edges";
    case StrongClass::ThreeConnected: return "three-connected";
    case StrongClass::Complete: return "complete";
    case StrongClass::ThreeEdgePath: return "three-edge-path";
    case StrongClass::NotStrongTree: return "not-strong-tree";
    case StrongClass::UnknownClass: return "unknown";
  }
  return "unknown";
}

bool is_hamiltonian(const Graph& g) {
  dense::Index ix = dense::Index::of(g);
  return dense::is_hamiltonian(ix.densify(g));
}

bool is_planar(const Graph& g) {
  dense::Index ix = dense::Index::of(g);
  return dense::is_planar(ix.densify(g));
}

bool contains_subgraph(const Graph& pattern, const Graph& g) {
  if (pattern.empty()) return true;
  if (g.empty()) return false;
  dense::Index pix = dense::Index::of(pattern);
  dense::Index gix = dense::Index::of(g);
  return dense::contains_subgraph(pix.densify(pattern), gix.densify(g));
}

namespace {

void enumerate_partitions(const std::vector<VertexLabel>& vs,
                          const std::vector<std::vector<bool>>& conflict,
                          std::vector<int>& block_of, std::size_t at, int used, int k,
                          std::set<ColoringPartition>& out) {
  if (at == vs.size()) {
    ColoringPartition p;
    std::vector<VertexSet> blocks(used);
    for (std::size_t i = 0; i < vs.size(); ++i) blocks[block_of[i]].insert(vs[i]);
    for (auto& b : blocks) p.blocks.insert(std::move(b));
    out.insert(std::move(p));
    return;
  }
  int limit = std::min(used + 1, k);
  for (int b = 0; b < limit; ++b) {
    bool ok = true;
    for (std::size_t j = 0; j < at && ok; ++j)
      if (block_of[j] == b && conflict[at][j]) ok = false;
    if (!ok) continue;
    block_of[at] = b;
    enumerate_partitions(vs, conflict, block_of, at + 1, std::max(used, b + 1), k, out);
  }
}

}  // namespace

std::set<ColoringPartition> enumerate_proper_colorings(const Graph& g, int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be >= 1");
  VertexSet vset = g.vertices();
  std::vector<VertexLabel> vs(vset.begin(), vset.end());
  std::vector<std::vector<bool>> conflict(vs.size(), std::vector<bool>(vs.size(), false));
  for (const Edge& e : g.edges()) {
    auto iu = std::size_t(std::lower_bound(vs.begin(), vs.end(), e.u()) - vs.begin());
    auto iv = std::size_t(std::lower_bound(vs.begin(), vs.end(), e.v()) - vs.begin());
    conflict[iu][iv] = conflict[iv][iu] = true;
  }
  std::set<ColoringPartition> out;
  std::vector<int> block_of(vs.size(), -1);
  enumerate_partitions(vs, conflict, block_of, 0, 0, k, out);
  return out;
}

bool is_k_colorable(const Graph& g, int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be >= 1");
  if (g.empty()) return true;
  dense::Index ix = dense::Index::of(g);
  return dense::is_k_colorable(ix.densify(g), k);
}

bool is_edge_2_colorable(const Graph& g) {
  if (g.empty()) return true;
  dense::Index ix = dense::Index::of(g);
  return dense::is_edge2colorable(ix.densify(g));
}

Edge2Profile edge2_profile(const Graph& g) {
  if (!is_edge_2_colorable(g))
    fail(ErrorCode::NotEdge2Colorable, "graph is not edge 2-colorable");
  Edge2Profile profile;
  for (const VertexLabel& v : g.vertices()) profile.degrees[v] = g.degree(v);
  for (const VertexSet& comp : components(g)) {
    std::size_t comp_edges = 0;
    std::vector<VertexLabel> ends;
    for (const VertexLabel& v : comp) {
      std::size_t d = profile.degrees.at(v);
      comp_edges += d;
      if (d == 1) ends.push_back(v);
    }
    comp_edges /= 2;
    if (comp_edges == comp.size()) {
      profile.cycles.insert(comp);
    } else {
      profile.path_odd[{ends[0], ends[1]}] = comp_edges % 2 == 1;
    }
  }
  return profile;
}

std::set<VertexSet> cutsets_below(const Graph& g, int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be >= 1");
  std::set<VertexSet> out;
  if (g.empty()) return out;

  dense::Index ix = dense::Index::of(g);
  dense::DenseGraph d = ix.densify(g);
  std::vector<std::uint16_t> comps = dense::component_masks(d);
  if (comps.size() >= 2) out.insert(VertexSet{});

  int n = ix.size();
  auto separates = [&](std::uint16_t c) {
    std::vector<std::uint16_t> post = dense::components_after_deletion(d, c);
    for (std::uint16_t orig : comps) {
      int touching = 0;
      for (std::uint16_t p : post)
        if (p & orig) ++touching;
      if (touching >= 2) return true;
    }
    return false;
  };

  for (int size = 1; size < k && size <= n; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::uint16_t c = 0;
      for (int i : pick) c |= std::uint16_t(1u << i);
      if (separates(c)) {
        VertexSet labels;
        for (int i : pick) labels.insert(ix.label(i));
        out.insert(std::move(labels));
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be >= 1");
  if (g.vertex_count() <= std::size_t(k)) return false;
  dense::Index ix = dense::Index::of(g);
  return !dense::has_cutset_below(ix.densify(g), k);
}

StrongClass classify_pattern(const Graph& h) {
  if (h.empty()) fail(ErrorCode::EmptyPattern, "empty pattern graph");

  const Edge& first = *h.edges().begin();
  for (const VertexLabel& c : {first.u(), first.v()}) {
    bool star = std::all_of(h.edges().begin(), h.edges().end(),
                            [&](const Edge& e) { return e.u() == c || e.v() == c; });
    if (star) return StrongClass::Star;
  }

  VertexSet vs = h.vertices();
  std::size_t n = vs.size();
  bool conn = components(h).size() == 1;
  bool all_deg2 = std::all_of(vs.begin(), vs.end(),
                              [&](const VertexLabel& v) { return h.degree(v) == 2; });
  if (conn && all_deg2) return StrongClass::Cycle;

  if (h.edge_count() == n * (n - 1) / 2) return StrongClass::Complete;

  if (is_k_connected(h, 3)) return StrongClass::ThreeConnected;

  if (is_k_connected(h, 2)) {
    bool cutset_edges = true;
    for (const VertexSet& c : cutsets_below(h, 3)) {
      auto it = c.begin();
      const VertexLabel& x = *it;
      const VertexLabel& y = *std::next(it);
      if (!h.contains(Edge(x, y))) { cutset_edges = false; break; }
    }
    if (cutset_edges) return StrongClass::TwoConnCutsetEdges;
  }

  if (conn && h.edge_count() == 3 && n == 4) {
    std::size_t deg1 = std::count_if(vs.begin(), vs.end(),
                                     [&](const VertexLabel& v) { return h.degree(v) == 1; });
    if (deg1 == 2) return StrongClass::ThreeEdgePath;
  }

  if (conn && h.edge_count() == n - 1) return StrongClass::NotStrongTree;

  return StrongClass::UnknownClass;
}

bool strong_class_is_characterized(StrongClass c) {
  switch (c) {
    case StrongClass::Star:
    case StrongClass::Cycle:
    case StrongClass::TwoConnCutsetEdges:
    case StrongClass::ThreeConnected:
    case StrongClass::Complete:
    case StrongClass::ThreeEdgePath:
      return true;
    case StrongClass::NotStrongTree:
    case StrongClass::UnknownClass:
      return false;
  }
  return false;
}

bool holds(const PropertySelector& prop, const Graph& g) {
  switch (prop.kind) {
    case PropertySelector::Kind::Hamiltonian: return is_hamiltonian(g);
    case PropertySelector::Kind::Planarity: return !is_planar(g);
    case PropertySelector::Kind::Subgraph: return contains_subgraph(prop.pattern, g);
    case PropertySelector::Kind::KColor: return is_k_colorable(g, prop.k);
    case PropertySelector::Kind::Edge2Color: return is_edge_2_colorable(g);
    case PropertySelector::Kind::KConn: {
      dense::Index ix = dense::Index::of(g);
      return dense::has_cutset_below(ix.densify(g), prop.k);
    }
    case PropertySelector::Kind::KConnPsi: return !is_k_connected(g, prop.k);
  }
  fail(ErrorCode::InvalidArgument, "bad property selector");
}

}  // namespace strongequiv::properties
