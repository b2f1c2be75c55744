#include "core/dense.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <unordered_map>

namespace strongequiv::dense {

Index::Index(std::vector<VertexLabel> labels) : labels_(std::move(labels)) {
  if (labels_.size() > 16)
    fail(ErrorCode::TooLarge,
         "graph has " + std::to_string(labels_.size()) + " vertices; limit is 16");
  for (std::size_t i = 0; i + 1 < labels_.size(); ++i)
    if (!(labels_[i] < labels_[i + 1]))
      fail(ErrorCode::InvalidArgument, "index labels must be sorted and distinct");
}

Index Index::of(const Graph& g) {
  VertexSet vs = g.vertices();
  return Index(std::vector<VertexLabel>(vs.begin(), vs.end()));
}

Index Index::of_union(const Graph& g, const Graph& h) {
  VertexSet vs = g.vertices();
  VertexSet hs = h.vertices();
  vs.insert(hs.begin(), hs.end());
  return Index(std::vector<VertexLabel>(vs.begin(), vs.end()));
}

int Index::position(const VertexLabel& v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v)
    fail(ErrorCode::ForeignVertex, "vertex '" + v + "' not in index");
  return int(it - labels_.begin());
}

DenseGraph Index::densify(const Graph& g) const {
  DenseGraph d;
  for (const Edge& e : g.edges()) d.add_edge(position(e.u()), position(e.v()));
  return d;
}

Graph Index::labelify(const DenseGraph& d) const {
  Graph g;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (d.adj[i] & (1u << j)) g.add(labels_[i], labels_[j]);
  return g;
}

std::vector<std::uint16_t> components_after_deletion(const DenseGraph& g, std::uint16_t c) {
  std::uint16_t alive = std::uint16_t(g.verts & ~c);
  std::vector<std::uint16_t> comps;
  std::uint16_t seen = 0;
  for (int s = 0; s < 16; ++s) {
    if (!(alive & (1u << s)) || (seen & (1u << s))) continue;
    std::uint16_t comp = std::uint16_t(1u << s);
    std::uint16_t frontier = comp;
    while (frontier) {
      std::uint16_t next = 0;
      std::uint16_t f = frontier;
      while (f) {
        int v = __builtin_ctz(f);
        f &= std::uint16_t(f - 1);
        next |= std::uint16_t(g.adj[v] & alive & ~comp);
      }
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

std::vector<std::uint16_t> component_masks(const DenseGraph& g) {
  return components_after_deletion(g, 0);
}

bool connected(const DenseGraph& g) {
  return component_masks(g).size() <= 1;
}

namespace {

int edge_count(const DenseGraph& g) {
  int total = 0;
  for (int i = 0; i < 16; ++i) total += __builtin_popcount(g.adj[i]);
  return total / 2;
}

bool ham_extend(const DenseGraph& g, int start, int current, std::uint16_t visited, int left) {
  if (left == 0) return (g.adj[current] >> start) & 1u;
  std::uint16_t cand = std::uint16_t(g.adj[current] & ~visited);
  while (cand) {
    int v = __builtin_ctz(cand);
    cand &= std::uint16_t(cand - 1);
    if (ham_extend(g, start, v, std::uint16_t(visited | (1u << v)), left - 1)) return true;
  }
  return false;
}

}  // namespace

bool is_hamiltonian(const DenseGraph& g) {
  int n = g.order();
  if (n < 3) return false;
  std::uint16_t vs = g.verts;
  while (vs) {
    int v = __builtin_ctz(vs);
    vs &= std::uint16_t(vs - 1);
    if (__builtin_popcount(g.adj[v]) < 2) return false;
  }
  if (!connected(g)) return false;
  int start = __builtin_ctz(g.verts);
  return ham_extend(g, start, start, std::uint16_t(1u << start), n - 1);
}

bool is_edge2colorable(const DenseGraph& g) {
  std::uint16_t vs = g.verts;
  while (vs) {
    int v = __builtin_ctz(vs);
    vs &= std::uint16_t(vs - 1);
    if (__builtin_popcount(g.adj[v]) > 2) return false;
  }
  // With all degrees <= 2, each component is a path or a cycle; cycles
  // (vertex count == edge count) must be even.
  for (std::uint16_t comp : component_masks(g)) {
    int cv = __builtin_popcount(comp);
    int ce = 0;
    std::uint16_t m = comp;
    while (m) {
      int v = __builtin_ctz(m);
      m &= std::uint16_t(m - 1);
      ce += __builtin_popcount(g.adj[v] & comp);
    }
    ce /= 2;
    if (ce == cv && cv % 2 != 0) return false;
  }
  return true;
}

namespace {

bool color_extend(const std::vector<std::uint16_t>& rows, std::vector<int>& color,
                  std::size_t at, int used, int k) {
  if (at == rows.size()) return true;
  int limit = std::min(used + 1, k);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (std::size_t j = 0; j < at; ++j) {
      if ((rows[at] >> j) & 1u && color[j] == c) { ok = false; break; }
    }
    if (!ok) continue;
    color[at] = c;
    if (color_extend(rows, color, at + 1, std::max(used, c + 1), k)) return true;
  }
  return false;
}

}  // namespace

bool is_k_colorable(const DenseGraph& g, int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be >= 1");
  std::vector<int> order;
  std::uint16_t vs = g.verts;
  while (vs) {
    int v = __builtin_ctz(vs);
    vs &= std::uint16_t(vs - 1);
    order.push_back(v);
  }
  if (order.empty()) return true;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return __builtin_popcount(g.adj[a]) > __builtin_popcount(g.adj[b]);
  });
  // Re-express adjacency in the chosen order so the extender only looks at
  // earlier positions.
  std::vector<std::uint16_t> rows(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((g.adj[order[i]] >> order[j]) & 1u) rows[i] |= std::uint16_t(1u << j);
  std::vector<int> color(order.size(), -1);
  return color_extend(rows, color, 0, 0, k);
}

bool has_cutset_below(const DenseGraph& g, int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be >= 1");
  std::vector<std::uint16_t> comps = component_masks(g);
  if (comps.size() >= 2) return true;  // the empty set is a cutset
  if (comps.empty()) return false;

  std::vector<int> active;
  std::uint16_t vs = g.verts;
  while (vs) {
    active.push_back(__builtin_ctz(vs));
    vs &= std::uint16_t(vs - 1);
  }
  int n = int(active.size());

  // A nonempty C is a cutset iff some pair connected in g is disconnected in
  // g-C, i.e. some component's survivors split across several parts.
  auto separates = [&](std::uint16_t c) {
    std::vector<std::uint16_t> post = components_after_deletion(g, c);
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
      for (int i : pick) c |= std::uint16_t(1u << active[i]);
      if (separates(c)) return true;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

namespace {

bool vf2_extend(const DenseGraph& pat, const DenseGraph& host,
                const std::vector<int>& porder, std::vector<int>& map,
                std::size_t at, std::uint16_t used) {
  if (at == porder.size()) return true;
  int p = porder[at];
  std::uint16_t cand = std::uint16_t(host.verts & ~used);
  while (cand) {
    int w = __builtin_ctz(cand);
    cand &= std::uint16_t(cand - 1);
    if (__builtin_popcount(host.adj[w]) < __builtin_popcount(pat.adj[p])) continue;
    bool ok = true;
    for (std::size_t j = 0; j < at && ok; ++j) {
      if ((pat.adj[p] >> porder[j]) & 1u)
        ok = (host.adj[w] >> map[porder[j]]) & 1u;
    }
    if (!ok) continue;
    map[p] = w;
    if (vf2_extend(pat, host, porder, map, at + 1, std::uint16_t(used | (1u << w)))) return true;
  }
  return false;
}

}  // namespace

bool contains_subgraph(const DenseGraph& pattern, const DenseGraph& host) {
  int pn = pattern.order();
  if (pn == 0) return true;
  if (pn > host.order() || edge_count(pattern) > edge_count(host)) return false;

  std::vector<int> porder;
  std::uint16_t vs = pattern.verts;
  while (vs) {
    porder.push_back(__builtin_ctz(vs));
    vs &= std::uint16_t(vs - 1);
  }
  // Most-constrained first: high degree, then adjacency to already-placed
  // vertices keeps the search tight on these tiny instances.
  std::stable_sort(porder.begin(), porder.end(), [&](int a, int b) {
    return __builtin_popcount(pattern.adj[a]) > __builtin_popcount(pattern.adj[b]);
  });
  for (std::size_t i = 1; i < porder.size(); ++i) {
    std::size_t best = i;
    auto connectivity = [&](std::size_t idx) {
      int c = 0;
      for (std::size_t j = 0; j < i; ++j)
        if ((pattern.adj[porder[idx]] >> porder[j]) & 1u) ++c;
      return c;
    };
    for (std::size_t j = i + 1; j < porder.size(); ++j)
      if (connectivity(j) > connectivity(best)) best = j;
    std::swap(porder[i], porder[best]);
  }

  std::vector<int> map(16, -1);
  return vf2_extend(pattern, host, porder, map, 0, 0);
}

namespace {

struct PlanarKey {
  std::array<std::uint16_t, 16> adj;
  bool operator==(const PlanarKey&) const = default;
};

struct PlanarKeyHash {
  std::size_t operator()(const PlanarKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint16_t row : k.adj) {
      h ^= row;
      h *= 1099511628211ull;
    }
    return std::size_t(h);
  }
};

bool boyer_myrvold(const DenseGraph& g) {
  std::vector<int> compact(16, -1);
  int n = 0;
  std::uint16_t vs = g.verts;
  while (vs) {
    int v = __builtin_ctz(vs);
    vs &= std::uint16_t(vs - 1);
    compact[v] = n++;
  }
  boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(n);
  for (int i = 0; i < 16; ++i) {
    if (compact[i] < 0) continue;
    std::uint16_t row = std::uint16_t(g.adj[i] & ~((1u << (i + 1)) - 1));
    while (row) {
      int j = __builtin_ctz(row);
      row &= std::uint16_t(row - 1);
      boost::add_edge(compact[i], compact[j], bg);
    }
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace

bool is_planar(const DenseGraph& g) {
  int m = edge_count(g);
  if (m <= 8) return true;  // every Kuratowski subdivision has >= 9 edges
  int n = g.order();
  if (m > 3 * n - 6) return false;

  thread_local std::unordered_map<PlanarKey, bool, PlanarKeyHash> memo;
  if (memo.size() > (1u << 22)) memo.clear();
  PlanarKey key{g.adj};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool planar = boyer_myrvold(g);
  memo.emplace(key, planar);
  return planar;
}

}  // namespace strongequiv::dense
