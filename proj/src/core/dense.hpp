#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "core/graph.hpp"

namespace strongequiv::dense {

// Index-based graph on at most 16 vertices. Adjacency rows are bitmasks;
// the vertex set is implicit (indices with degree >= 1), mirroring the
// edge-set Graph type.
struct DenseGraph {
  std::array<std::uint16_t, 16> adj{};
  std::uint16_t verts = 0;

  void add_edge(int u, int v) {
    adj[u] |= std::uint16_t(1u << v);
    adj[v] |= std::uint16_t(1u << u);
    verts |= std::uint16_t((1u << u) | (1u << v));
  }

  int order() const { return __builtin_popcount(verts); }

  bool operator==(const DenseGraph&) const = default;
};

inline DenseGraph merge(const DenseGraph& a, const DenseGraph& b) {
  DenseGraph out;
  for (int i = 0; i < 16; ++i) out.adj[i] = std::uint16_t(a.adj[i] | b.adj[i]);
  out.verts = std::uint16_t(a.verts | b.verts);
  return out;
}

// A fixed vertex-label ordering used to translate between Graph and
// DenseGraph. Throws TooLarge past 16 labels.
class Index {
public:
  explicit Index(std::vector<VertexLabel> labels);
  static Index of(const Graph& g);
  static Index of_union(const Graph& g, const Graph& h);

  int size() const { return int(labels_.size()); }
  const VertexLabel& label(int i) const { return labels_[i]; }
  int position(const VertexLabel& v) const;

  DenseGraph densify(const Graph& g) const;
  Graph labelify(const DenseGraph& d) const;

private:
  std::vector<VertexLabel> labels_;
};

bool connected(const DenseGraph& g);
std::vector<std::uint16_t> component_masks(const DenseGraph& g);

bool is_hamiltonian(const DenseGraph& g);
bool is_planar(const DenseGraph& g);  // memoized Boyer-Myrvold behind quick filters
bool is_edge2colorable(const DenseGraph& g);
bool is_k_colorable(const DenseGraph& g, int k);
bool has_cutset_below(const DenseGraph& g, int k);
bool contains_subgraph(const DenseGraph& pattern, const DenseGraph& host);

// Component families of g-C with C given as a vertex mask; isolated
// survivors appear as singleton masks. Returned sorted.
std::vector<std::uint16_t> components_after_deletion(const DenseGraph& g, std::uint16_t c);

}  // namespace strongequiv::dense
