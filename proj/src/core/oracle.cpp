#include "core/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"

#include "core/deciders.hpp"
#include "core/dense.hpp"
#include "core/properties.hpp"
#include "core/witnesses.hpp"

namespace strongequiv::oracle {

std::string compact(const Graph& g) {
  if (g.empty()) return "(empty)";
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ',';
    out += e.u();
    out += '-';
    out += e.v();
  }
  return out;
}

OracleBudget default_budget(const PropertySelector& prop, const Graph& g, const Graph& h) {
  VertexSet uv = g.vertices();
  VertexSet hv = h.vertices();
  uv.insert(hv.begin(), hv.end());
  int n = int(uv.size());

  int fresh = 2;
  switch (prop.kind) {
    case PropertySelector::Kind::Hamiltonian: fresh = std::max(2, n - 3); break;
    case PropertySelector::Kind::Planarity: fresh = 3; break;
    case PropertySelector::Kind::Subgraph:
      fresh = std::max<int>(2, int(prop.pattern.vertex_count()));
      break;
    case PropertySelector::Kind::KColor: fresh = std::max(2, prop.k - 1); break;
    case PropertySelector::Kind::Edge2Color: fresh = 2; break;
    case PropertySelector::Kind::KConn:
    case PropertySelector::Kind::KConnPsi: fresh = std::max(2, prop.k); break;
  }
  return OracleBudget{fresh, 0, 0};
}

namespace {

// Evaluates the selected property on pool-indexed graphs; the subgraph
// pattern is densified once up front.
class DenseEval {
public:
  explicit DenseEval(const PropertySelector& prop) : kind_(prop.kind), k_(prop.k) {
    if (kind_ == PropertySelector::Kind::Subgraph) {
      dense::Index pix = dense::Index::of(prop.pattern);
      pattern_ = pix.densify(prop.pattern);
    }
  }

  bool operator()(const dense::DenseGraph& g) const {
    switch (kind_) {
      case PropertySelector::Kind::Hamiltonian: return dense::is_hamiltonian(g);
      case PropertySelector::Kind::Planarity: return !dense::is_planar(g);
      case PropertySelector::Kind::Subgraph: return dense::contains_subgraph(pattern_, g);
      case PropertySelector::Kind::KColor: return dense::is_k_colorable(g, k_);
      case PropertySelector::Kind::Edge2Color: return dense::is_edge2colorable(g);
      case PropertySelector::Kind::KConn: return dense::has_cutset_below(g, k_);
      case PropertySelector::Kind::KConnPsi:
        return dense::has_cutset_below(g, k_) || g.order() <= k_;
    }
    return false;
  }

private:
  PropertySelector::Kind kind_;
  int k_;
  dense::DenseGraph pattern_;
};

}  // namespace

Refutation refute_bounded(const PropertySelector& prop, const Graph& g, const Graph& h,
                          const OracleBudget& budget) {
  int fresh = budget.fresh_count >= 0
                  ? budget.fresh_count
                  : default_budget(prop, g, h).fresh_count;

  VertexSet pool_set = g.vertices();
  VertexSet hv = h.vertices();
  pool_set.insert(hv.begin(), hv.end());
  for (const VertexLabel& w : fresh_vertices(std::size_t(fresh), pool_set))
    pool_set.insert(w);
  dense::Index pool(std::vector<VertexLabel>(pool_set.begin(), pool_set.end()));

  dense::DenseGraph dg = pool.densify(g);
  dense::DenseGraph dh = pool.densify(h);
  DenseEval eval(prop);

  std::vector<std::pair<int, int>> cands;
  for (int i = 0; i < pool.size(); ++i)
    for (int j = i + 1; j < pool.size(); ++j) cands.push_back({i, j});
  std::uint64_t ncand = cands.size();

  std::uint64_t max_edges = budget.max_edges == 0 ? ncand : std::min(budget.max_edges, ncand);
  std::uint64_t max_candidates =
      budget.max_candidates == 0 ? (std::uint64_t(1) << 22) : budget.max_candidates;

  Refutation result;
  for (std::uint64_t size = 0; size <= max_edges; ++size) {
    std::vector<int> pick(size);
    for (std::uint64_t i = 0; i < size; ++i) pick[i] = int(i);
    while (true) {
      if (result.candidates_tried == max_candidates) {
        result.kind = RefutationKind::BudgetExceeded;
        return result;
      }
      ++result.candidates_tried;

      dense::DenseGraph df;
      for (int i : pick) df.add_edge(cands[i].first, cands[i].second);
      dense::DenseGraph gf = dense::merge(dg, df);
      dense::DenseGraph hf = dense::merge(dh, df);
      if (!(gf == hf) && eval(gf) != eval(hf)) {
        Graph f;
        for (int i : pick)
          f.add(pool.label(cands[i].first), pool.label(cands[i].second));
        result.kind = RefutationKind::Separated;
        result.separating = std::move(f);
        return result;
      }

      if (size == 0) break;
      int i = int(size) - 1;
      while (i >= 0 && pick[i] == int(ncand - size) + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (std::uint64_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  result.kind = RefutationKind::ExhaustedAbsent;
  return result;
}

namespace {

std::vector<Graph> all_graphs_on(int vertices) {
  if (vertices < 1 || vertices > 6)
    fail(ErrorCode::InvalidArgument, "instance family needs 1..6 vertices");
  std::vector<VertexLabel> labels;
  for (int i = 0; i < vertices; ++i) labels.push_back(std::string(1, char('a' + i)));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) edges.push_back({i, j});
  std::vector<Graph> graphs;
  graphs.reserve(std::size_t(1) << edges.size());
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    Graph g;
    for (std::size_t b = 0; b < edges.size(); ++b)
      if (mask & (1u << b)) g.add(labels[edges[b].first], labels[edges[b].second]);
    graphs.push_back(std::move(g));
  }
  return graphs;
}

void check_pair(const PropertySelector& prop, const Graph& g, const Graph& h,
                const OracleBudget& budget, CrosscheckReport& report, bool keep_records) {
  PairCheck rec;
  rec.g = compact(g);
  rec.h = compact(h);

  DecisionOutcome outcome = deciders::decide(prop, g, h);
  rec.verdict = outcome.verdict;
  ++report.pairs;

  if (outcome.verdict == Verdict::Unknown) {
    ++report.unknown;
    rec.check = "skipped";
  } else if (outcome.verdict == Verdict::NotEquivalent) {
    ++report.not_equivalent;
    try {
      std::optional<Witness> w = witnesses::witness_for(prop, g, h);
      if (!w) {
        rec.check = "witness-missing";
        rec.agreement = false;
      } else if (!witnesses::verify_witness(prop, g, h, w->extension)) {
        rec.check = "witness-rejected";
        rec.agreement = false;
      } else {
        rec.check = "witness-verified";
      }
    } catch (const Error& err) {
      rec.check = std::string("witness-error: ") + err.what();
      rec.agreement = false;
    }
  } else {
    ++report.equivalent;
    Refutation r = refute_bounded(prop, g, h, budget);
    switch (r.kind) {
      case RefutationKind::ExhaustedAbsent:
        rec.check = "oracle-exhausted";
        break;
      case RefutationKind::Separated:
        rec.check = "oracle-separated f=" + compact(*r.separating);
        rec.agreement = false;
        break;
      case RefutationKind::BudgetExceeded:
        rec.check = "oracle-budget-exceeded";
        rec.agreement = false;
        break;
    }
  }

  if (!rec.agreement)
    report.violations.push_back("g=" + rec.g + " h=" + rec.h + " verdict=" +
                                std::to_string(int(rec.verdict)) + " " + rec.check);
  if (keep_records) report.records.push_back(std::move(rec));
}

}  // namespace

CrosscheckReport crosscheck(const PropertySelector& prop, const InstanceFamily& family,
                            const OracleBudget& budget, bool keep_records) {
  CrosscheckReport report;
  report.property = prop.describe();
  report.vertices = family.vertices;
  report.exhaustive = family.sample_pairs == 0;

  std::vector<Graph> graphs = all_graphs_on(family.vertices);
  if (family.sample_pairs == 0) {
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = i; j < graphs.size(); ++j)
        check_pair(prop, graphs[i], graphs[j], budget, report, keep_records);
  } else {
    std::mt19937_64 rng(family.seed);
    for (std::uint64_t s = 0; s < family.sample_pairs; ++s) {
      std::size_t i = std::size_t(rng() % graphs.size());
      std::size_t j = std::size_t(rng() % graphs.size());
      check_pair(prop, graphs[i], graphs[j], budget, report, keep_records);
    }
  }
  return report;
}

std::string CrosscheckReport::render_text() const {
  std::ostringstream out;
  out << "crosscheck property=" << property << " vertices=" << vertices
      << " mode=" << (exhaustive ? "exhaustive" : "sampled") << "\n";
  for (const std::string& v : violations) out << "violation " << v << "\n";
  out << "pairs=" << pairs << " equivalent=" << equivalent
      << " not-equivalent=" << not_equivalent << " unknown=" << unknown
      << " violations=" << violations.size() << "\n";
  return out.str();
}

std::string CrosscheckReport::render_json() const {
  std::ostringstream out;
  for (const PairCheck& r : records) {
    nlohmann::json j{{"g", r.g},
                     {"h", r.h},
                     {"verdict", int(r.verdict)},
                     {"check", r.check},
                     {"agreement", r.agreement}};
    out << j.dump() << "\n";
  }
  nlohmann::json summary{{"property", property},
                         {"vertices", vertices},
                         {"exhaustive", exhaustive},
                         {"pairs", pairs},
                         {"equivalent", equivalent},
                         {"not_equivalent", not_equivalent},
                         {"unknown", unknown},
                         {"violations", violations.size()}};
  out << summary.dump() << "\n";
  return out.str();
}

CompleteCriterionReport complete_graph_criterion(const PropertySelector& prop,
                                                 int max_vertices,
                                                 const OracleBudget& budget) {
  if (max_vertices < 2)
    fail(ErrorCode::InvalidArgument, "need at least 2 vertices");
  CompleteCriterionReport report;
  report.property = prop.describe();
  report.all_separated = true;
  for (int n = 2; n <= max_vertices; ++n) {
    VertexSet vs;
    for (int i = 0; i < n; ++i) vs.insert(std::string(1, char('a' + i)));
    Graph k = build_complete(vs);
    Edge e = *k.edges().begin();  // one representative per symmetry class
    Refutation r = refute_bounded(prop, k, k.without(e), budget);
    if (r.kind != RefutationKind::Separated) report.all_separated = false;
    report.entries.push_back({n, r.kind, std::move(r.separating)});
  }
  return report;
}

std::string CompleteCriterionReport::render_text() const {
  std::ostringstream out;
  out << "complete-graph-criterion property=" << property << "\n";
  for (const CompleteCriterionEntry& e : entries) {
    out << "n=" << e.vertices << " ";
    switch (e.kind) {
      case RefutationKind::Separated:
        out << "separated f=" << compact(*e.separating);
        break;
      case RefutationKind::ExhaustedAbsent: out << "exhausted"; break;
      case RefutationKind::BudgetExceeded: out << "budget"; break;
    }
    out << "\n";
  }
  out << (all_separated ? "all-separated" : "not-all-separated") << "\n";
  return out.str();
}

std::string CompleteCriterionReport::render_json() const {
  std::ostringstream out;
  for (const CompleteCriterionEntry& e : entries) {
    nlohmann::json j{{"vertices", e.vertices},
                     {"result", e.kind == RefutationKind::Separated     ? "separated"
                                : e.kind == RefutationKind::ExhaustedAbsent ? "exhausted"
                                                                            : "budget"}};
    if (e.separating) j["f"] = compact(*e.separating);
    out << j.dump() << "\n";
  }
  nlohmann::json summary{{"property", property}, {"all_separated", all_separated}};
  out << summary.dump() << "\n";
  return out.str();
}

}  // namespace strongequiv::oracle
