#include "strongequiv.h"

#include <cstring>
#include <sstream>
#include <string>

#include "json.hpp"

#include "core/deciders.hpp"
#include "core/graph.hpp"
#include "core/oracle.hpp"
#include "core/properties.hpp"
#include "core/setcore.hpp"
#include "core/witnesses.hpp"

struct se_graph {
  strongequiv::Graph value;
};

struct se_property {
  strongequiv::PropertySelector value;
};

namespace {

thread_local std::string g_last_error;

se_status map_code(strongequiv::ErrorCode code) {
  using strongequiv::ErrorCode;
  switch (code) {
    case ErrorCode::MalformedLine:
    case ErrorCode::LoopEdge:
      return SE_ERR_PARSE;
    case ErrorCode::ForeignVertex:
    case ErrorCode::DegenerateSpec:
    case ErrorCode::EmptyPattern:
    case ErrorCode::EmptyInput:
    case ErrorCode::NotEdge2Colorable:
    case ErrorCode::InvalidArgument:
      return SE_ERR_INVALID_ARGUMENT;
    case ErrorCode::TooLarge:
      return SE_ERR_TOO_LARGE;
    case ErrorCode::Unsupported:
      return SE_ERR_UNSUPPORTED;
    case ErrorCode::NoWitness:
      return SE_ERR_NO_WITNESS;
  }
  return SE_ERR_INTERNAL;
}

template <typename Fn>
se_status guarded(Fn&& fn) {
  try {
    fn();
    return SE_OK;
  } catch (const strongequiv::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SE_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

se_status require(bool ok, const char* what) {
  if (ok) return SE_OK;
  g_last_error = what;
  return SE_ERR_INVALID_ARGUMENT;
}

strongequiv::oracle::OracleBudget to_core(se_budget b) {
  return {b.fresh_count, b.max_edges, b.max_candidates};
}

}  // namespace

extern "C" {

const char* se_version(void) { return "1.0.0"; }

const char* se_last_error(void) { return g_last_error.c_str(); }

void se_free_string(char* s) { delete[] s; }

se_status se_graph_parse(const char* text, se_graph** out) {
  if (se_status s = require(text && out, "null argument"); s != SE_OK) return s;
  return guarded([&] { *out = new se_graph{strongequiv::Graph::parse(text)}; });
}

se_status se_graph_serialize(const se_graph* g, char** out_text) {
  if (se_status s = require(g && out_text, "null argument"); s != SE_OK) return s;
  return guarded([&] { *out_text = dup_string(g->value.serialize()); });
}

se_status se_graph_union(const se_graph* g, const se_graph* h, se_graph** out) {
  if (se_status s = require(g && h && out, "null argument"); s != SE_OK) return s;
  return guarded([&] { *out = new se_graph{strongequiv::graph_union(g->value, h->value)}; });
}

int se_graph_equal(const se_graph* g, const se_graph* h) {
  return g && h && g->value == h->value ? 1 : 0;
}

int64_t se_graph_edge_count(const se_graph* g) {
  return g ? int64_t(g->value.edge_count()) : -1;
}

int64_t se_graph_vertex_count(const se_graph* g) {
  return g ? int64_t(g->value.vertex_count()) : -1;
}

void se_graph_free(se_graph* g) { delete g; }

se_status se_property_parse(const char* spec, se_property** out) {
  if (se_status s = require(spec && out, "null argument"); s != SE_OK) return s;
  return guarded([&] {
    using strongequiv::PropertySelector;
    std::string text(spec);
    auto with_k = [&](const std::string& prefix) -> int {
      std::string tail = text.substr(prefix.size());
      std::size_t used = 0;
      int k = std::stoi(tail, &used);
      if (used != tail.size())
        strongequiv::fail(strongequiv::ErrorCode::InvalidArgument,
                          "bad parameter in property spec '" + text + "'");
      return k;
    };
    PropertySelector p;
    if (text == "ham") p = PropertySelector::hamiltonian();
    else if (text == "planar") p = PropertySelector::planarity();
    else if (text == "edge2color") p = PropertySelector::edge2color();
    else if (text.starts_with("kcolor:")) p = PropertySelector::kcolor(with_k("kcolor:"));
    else if (text.starts_with("kconn-psi:")) p = PropertySelector::kconn_psi(with_k("kconn-psi:"));
    else if (text.starts_with("kconn:")) p = PropertySelector::kconn(with_k("kconn:"));
    else
      strongequiv::fail(strongequiv::ErrorCode::InvalidArgument,
                        "unknown property spec '" + text + "'");
    *out = new se_property{std::move(p)};
  });
}

se_status se_property_subgraph(const se_graph* pattern, se_property** out) {
  if (se_status s = require(pattern && out, "null argument"); s != SE_OK) return s;
  return guarded([&] {
    *out = new se_property{strongequiv::PropertySelector::subgraph(pattern->value)};
  });
}

void se_property_free(se_property* p) { delete p; }

se_status se_decide(const se_property* p, const se_graph* g, const se_graph* h,
                    se_verdict* verdict, char** reason_out) {
  if (se_status s = require(p && g && h && verdict, "null argument"); s != SE_OK) return s;
  return guarded([&] {
    strongequiv::DecisionOutcome outcome =
        strongequiv::deciders::decide(p->value, g->value, h->value);
    *verdict = se_verdict(int(outcome.verdict));
    if (reason_out) *reason_out = dup_string(outcome.reason);
  });
}

se_status se_witness(const se_property* p, const se_graph* g, const se_graph* h,
                     se_graph** f_out, se_side* side_out, char** construction_out) {
  if (se_status s = require(p && g && h && f_out, "null argument"); s != SE_OK) return s;
  return guarded([&] {
    std::optional<strongequiv::Witness> w =
        strongequiv::witnesses::witness_for(p->value, g->value, h->value);
    if (!w)
      strongequiv::fail(strongequiv::ErrorCode::InvalidArgument,
                        "pair is equivalent; no separating extension exists");
    *f_out = new se_graph{std::move(w->extension)};
    if (side_out) *side_out = se_side(int(w->property_side));
    if (construction_out) *construction_out = dup_string(w->construction);
  });
}

se_status se_verify_witness(const se_property* p, const se_graph* g, const se_graph* h,
                            const se_graph* f, int* ok_out) {
  if (se_status s = require(p && g && h && f && ok_out, "null argument"); s != SE_OK) return s;
  return guarded([&] {
    *ok_out = strongequiv::witnesses::verify_witness(p->value, g->value, h->value, f->value)
                  ? 1
                  : 0;
  });
}

se_status se_budget_default(const se_property* p, const se_graph* g, const se_graph* h,
                            se_budget* out) {
  if (se_status s = require(p && g && h && out, "null argument"); s != SE_OK) return s;
  return guarded([&] {
    strongequiv::oracle::OracleBudget b =
        strongequiv::oracle::default_budget(p->value, g->value, h->value);
    *out = se_budget{b.fresh_count, b.max_edges, b.max_candidates};
  });
}

se_status se_refute_bounded(const se_property* p, const se_graph* g, const se_graph* h,
                            se_budget budget, se_oracle_outcome* outcome,
                            se_graph** f_out) {
  if (se_status s = require(p && g && h && outcome, "null argument"); s != SE_OK) return s;
  return guarded([&] {
    strongequiv::oracle::Refutation r =
        strongequiv::oracle::refute_bounded(p->value, g->value, h->value, to_core(budget));
    *outcome = se_oracle_outcome(int(r.kind));
    if (f_out) *f_out = r.separating ? new se_graph{std::move(*r.separating)} : nullptr;
  });
}

se_status se_crosscheck(const se_property* p, int vertices, uint64_t sample_pairs,
                        uint64_t seed, se_budget budget, int as_json, char** report_out,
                        int64_t* violations_out) {
  if (se_status s = require(p && report_out, "null argument"); s != SE_OK) return s;
  return guarded([&] {
    strongequiv::oracle::InstanceFamily family{vertices, sample_pairs, seed};
    strongequiv::oracle::CrosscheckReport report = strongequiv::oracle::crosscheck(
        p->value, family, to_core(budget), as_json != 0);
    *report_out = dup_string(as_json ? report.render_json() : report.render_text());
    if (violations_out) *violations_out = int64_t(report.violations.size());
  });
}

se_status se_complete_graph_criterion(const se_property* p, int max_vertices,
                                      se_budget budget, int as_json, char** report_out,
                                      int* all_separated_out) {
  if (se_status s = require(p && report_out, "null argument"); s != SE_OK) return s;
  return guarded([&] {
    strongequiv::oracle::CompleteCriterionReport report =
        strongequiv::oracle::complete_graph_criterion(p->value, max_vertices,
                                                      to_core(budget));
    *report_out = dup_string(as_json ? report.render_json() : report.render_text());
    if (all_separated_out) *all_separated_out = report.all_separated ? 1 : 0;
  });
}

se_status se_reduce_kcolor(const se_graph* gprime, int k, se_graph** g_out,
                           se_graph** h_out) {
  if (se_status s = require(gprime && g_out && h_out, "null argument"); s != SE_OK) return s;
  return guarded([&] {
    auto [g, h] = strongequiv::deciders::np_reduce_kcolor(gprime->value, k);
    *g_out = new se_graph{std::move(g)};
    *h_out = new se_graph{std::move(h)};
  });
}

se_status se_min_equivalent_subgraph(const se_graph* g, int k, uint64_t budget,
                                     se_graph** out, int* budget_exceeded_out) {
  if (se_status s = require(g && out, "null argument"); s != SE_OK) return s;
  return guarded([&] {
    strongequiv::deciders::MinSubgraphResult r =
        strongequiv::deciders::min_equivalent_subgraph(g->value, k, budget);
    *out = r.subgraph ? new se_graph{std::move(*r.subgraph)} : nullptr;
    if (budget_exceeded_out) *budget_exceeded_out = r.budget_exceeded ? 1 : 0;
  });
}

se_status se_setcheck(const char* family_text, int as_json, char** report_out,
                      int* agreement_out) {
  if (se_status s = require(family_text && report_out, "null argument"); s != SE_OK) return s;
  return guarded([&] {
    namespace sc = strongequiv::setcore;

    std::istringstream in(family_text);
    std::string line;
    std::vector<std::string> universe_labels;
    std::vector<std::set<std::string>> member_subsets;
    bool have_universe = false;
    while (std::getline(in, line)) {
      std::istringstream tokens(line);
      std::vector<std::string> toks;
      std::string t;
      while (tokens >> t) toks.push_back(t);
      if (toks.empty() || toks.front().starts_with("#")) continue;
      if (!have_universe) {
        universe_labels = toks;
        have_universe = true;
        continue;
      }
      std::set<std::string> subset;
      if (!(toks.size() == 1 && toks[0] == "-"))
        subset.insert(toks.begin(), toks.end());
      member_subsets.push_back(std::move(subset));
    }
    if (!have_universe)
      strongequiv::fail(strongequiv::ErrorCode::MalformedLine,
                        "family file is missing the universe line");

    sc::FiniteUniverse universe(universe_labels);
    std::set<sc::SubsetMask> members;
    for (const auto& subset : member_subsets) members.insert(universe.mask_of(subset));
    sc::SubsetProperty prop(universe, members);

    sc::ThresholdForm form = sc::classify_threshold_form(prop);
    sc::RelationTable base = sc::equiv_from_property(prop);
    bool fixed = sc::bounded_strengthen(base) == base;
    bool agree = (form.kind != sc::ThresholdForm::Kind::Neither) == fixed;
    if (agreement_out) *agreement_out = agree ? 1 : 0;

    const char* form_name = form.kind == sc::ThresholdForm::Kind::Intersecting ? "intersecting"
                            : form.kind == sc::ThresholdForm::Kind::Subset     ? "subset"
                                                                               : "neither";
    std::set<std::string> x = universe.labels_of(form.x);

    if (as_json) {
      nlohmann::json j{{"universe", universe_labels},
                       {"members", members.size()},
                       {"form", form_name},
                       {"strengthening_fixed", fixed},
                       {"agreement", agree}};
      if (form.kind != sc::ThresholdForm::Kind::Neither)
        j["x"] = std::vector<std::string>(x.begin(), x.end());
      *report_out = dup_string(j.dump() + "\n");
      return;
    }

    std::ostringstream out;
    out << "universe:";
    for (const std::string& e : universe_labels) out << " " << e;
    out << "\nmembers: " << members.size() << "\nform: " << form_name;
    if (form.kind != sc::ThresholdForm::Kind::Neither) {
      out << " {";
      bool first = true;
      for (const std::string& e : x) {
        if (!first) out << ",";
        out << e;
        first = false;
      }
      out << "}";
    }
    out << "\nstrengthening-fixed: " << (fixed ? "yes" : "no")
        << "\nagreement: " << (agree ? "ok" : "MISMATCH") << "\n";
    *report_out = dup_string(out.str());
  });
}

}  // extern "C"
