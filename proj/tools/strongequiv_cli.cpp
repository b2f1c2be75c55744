// Command-line front end for the strongequiv shared library. Everything goes
// through the C API; exit codes follow the verdict (0 equivalent,
// 1 not-equivalent, 2 unknown, 3 inconclusive budget), with 64 for usage
// errors, 65 for malformed input files and 70 for internal failures.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "strongequiv.h"

namespace {

constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;
constexpr int kExitInternal = 70;

struct GraphDeleter {
  void operator()(se_graph* g) const { se_graph_free(g); }
};
struct PropertyDeleter {
  void operator()(se_property* p) const { se_property_free(p); }
};
using GraphPtr = std::unique_ptr<se_graph, GraphDeleter>;
using PropertyPtr = std::unique_ptr<se_property, PropertyDeleter>;

std::string owned_string(char* s) {
  std::string out = s ? s : "";
  se_free_string(s);
  return out;
}

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(code);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitBadInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GraphPtr load_graph(const std::string& path) {
  se_graph* g = nullptr;
  if (se_graph_parse(read_file(path).c_str(), &g) != SE_OK)
    die(kExitBadInput, path + ": " + se_last_error());
  return GraphPtr(g);
}

PropertyPtr load_property(const std::string& spec) {
  se_property* p = nullptr;
  if (spec.rfind("subgraph:", 0) == 0) {
    GraphPtr pattern = load_graph(spec.substr(9));
    if (se_property_subgraph(pattern.get(), &p) != SE_OK)
      die(kExitBadInput, std::string("bad pattern: ") + se_last_error());
  } else if (se_property_parse(spec.c_str(), &p) != SE_OK) {
    die(kExitUsage, std::string("bad --property: ") + se_last_error());
  }
  return PropertyPtr(p);
}

std::string serialize(const se_graph* g) {
  char* text = nullptr;
  if (se_graph_serialize(g, &text) != SE_OK)
    die(kExitInternal, se_last_error());
  return owned_string(text);
}

const char* verdict_word(se_verdict v) {
  switch (v) {
    case SE_VERDICT_EQUIVALENT: return "EQUIVALENT";
    case SE_VERDICT_NOT_EQUIVALENT: return "NOT-EQUIVALENT";
    case SE_VERDICT_UNKNOWN: return "UNKNOWN";
  }
  return "UNKNOWN";
}

const char* verdict_json(se_verdict v) {
  switch (v) {
    case SE_VERDICT_EQUIVALENT: return "equivalent";
    case SE_VERDICT_NOT_EQUIVALENT: return "not-equivalent";
    case SE_VERDICT_UNKNOWN: return "unknown";
  }
  return "unknown";
}

struct BudgetFlags {
  int fresh = -1;            // per-property default
  std::uint64_t max_edges = 0;    // complete pool
  std::uint64_t candidates = 0;   // built-in cap

  se_budget resolve() const { return se_budget{fresh, max_edges, candidates}; }

  void attach(CLI::App* cmd) {
    cmd->add_option("--fresh", fresh, "fresh vertices added to the pool (-1 = default)");
    cmd->add_option("--max-edges", max_edges, "cap on |F| (0 = complete pool)");
    cmd->add_option("--budget", candidates, "cap on enumerated candidates (0 = default)");
  }
};

int run_decide(const std::string& prop_spec, const std::string& g_path,
               const std::string& h_path, bool json) {
  PropertyPtr prop = load_property(prop_spec);
  GraphPtr g = load_graph(g_path);
  GraphPtr h = load_graph(h_path);
  se_verdict verdict;
  char* reason = nullptr;
  if (se_decide(prop.get(), g.get(), h.get(), &verdict, &reason) != SE_OK)
    die(kExitBadInput, se_last_error());
  std::string why = owned_string(reason);
  if (json) {
    nlohmann::json j{{"verdict", verdict_json(verdict)}};
    if (verdict == SE_VERDICT_UNKNOWN) j["reason"] = why;
    std::cout << j.dump() << "\n";
  } else if (verdict == SE_VERDICT_UNKNOWN) {
    std::cout << "UNKNOWN: " << why << "\n";
  } else {
    std::cout << verdict_word(verdict) << "\n";
  }
  return int(verdict);
}

int run_witness(const std::string& prop_spec, const std::string& g_path,
                const std::string& h_path, bool json) {
  PropertyPtr prop = load_property(prop_spec);
  GraphPtr g = load_graph(g_path);
  GraphPtr h = load_graph(h_path);
  se_verdict verdict;
  char* reason = nullptr;
  if (se_decide(prop.get(), g.get(), h.get(), &verdict, &reason) != SE_OK)
    die(kExitBadInput, se_last_error());
  std::string why = owned_string(reason);
  if (verdict != SE_VERDICT_NOT_EQUIVALENT) {
    if (json) {
      nlohmann::json j{{"verdict", verdict_json(verdict)}};
      if (verdict == SE_VERDICT_UNKNOWN) j["reason"] = why;
      std::cout << j.dump() << "\n";
    } else if (verdict == SE_VERDICT_UNKNOWN) {
      std::cout << "UNKNOWN: " << why << "\n";
    } else {
      std::cout << "EQUIVALENT\n";
    }
    return int(verdict);
  }

  se_graph* f = nullptr;
  se_side side;
  char* construction = nullptr;
  if (se_witness(prop.get(), g.get(), h.get(), &f, &side, &construction) != SE_OK)
    die(kExitInternal, se_last_error());
  GraphPtr fp(f);
  std::string tag = owned_string(construction);
  std::string text = serialize(f);
  if (json) {
    nlohmann::json j{{"verdict", "not-equivalent"},
                     {"side", side == SE_SIDE_FIRST ? "first" : "second"},
                     {"construction", tag},
                     {"extension", text}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "NOT-EQUIVALENT side=" << (side == SE_SIDE_FIRST ? "first" : "second")
              << " construction=" << tag << "\n"
              << text;
  }
  return 1;
}

int run_oracle(const std::string& prop_spec, const std::string& g_path,
               const std::string& h_path, const BudgetFlags& budget, bool json) {
  PropertyPtr prop = load_property(prop_spec);
  GraphPtr g = load_graph(g_path);
  GraphPtr h = load_graph(h_path);
  se_oracle_outcome outcome;
  se_graph* f = nullptr;
  if (se_refute_bounded(prop.get(), g.get(), h.get(), budget.resolve(), &outcome, &f) != SE_OK)
    die(kExitBadInput, se_last_error());
  GraphPtr fp(f);
  if (json) {
    nlohmann::json j;
    switch (outcome) {
      case SE_ORACLE_SEPARATED:
        j = {{"outcome", "separated"}, {"f", serialize(f)}};
        break;
      case SE_ORACLE_EXHAUSTED: j = {{"outcome", "exhausted"}}; break;
      case SE_ORACLE_BUDGET: j = {{"outcome", "budget"}}; break;
    }
    std::cout << j.dump() << "\n";
  } else {
    switch (outcome) {
      case SE_ORACLE_SEPARATED: std::cout << serialize(f); break;
      case SE_ORACLE_EXHAUSTED: std::cout << "exhausted\n"; break;
      case SE_ORACLE_BUDGET: std::cout << "budget\n"; break;
    }
  }
  if (outcome == SE_ORACLE_SEPARATED) return 1;
  return outcome == SE_ORACLE_EXHAUSTED ? 0 : kExitBudget;
}

int run_reduce_kcolor(int k, const std::string& g_path, bool json) {
  GraphPtr gprime = load_graph(g_path);
  se_graph* g = nullptr;
  se_graph* h = nullptr;
  if (se_reduce_kcolor(gprime.get(), k, &g, &h) != SE_OK)
    die(kExitBadInput, se_last_error());
  GraphPtr gp(g), hp(h);
  if (json) {
    nlohmann::json j{{"g", serialize(g)}, {"h", serialize(h)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << serialize(g) << "\n" << serialize(h);
  }
  return 0;
}

int run_crosscheck(const std::string& prop_spec, int vertices, std::uint64_t samples,
                   std::uint64_t seed, const BudgetFlags& budget, bool json) {
  PropertyPtr prop = load_property(prop_spec);
  char* report = nullptr;
  int64_t violations = 0;
  if (se_crosscheck(prop.get(), vertices, samples, seed, budget.resolve(), json ? 1 : 0,
                    &report, &violations) != SE_OK)
    die(kExitBadInput, se_last_error());
  std::cout << owned_string(report);
  return violations == 0 ? 0 : 1;
}

int run_min_subgraph(int k, const std::string& g_path, std::uint64_t budget, bool json) {
  GraphPtr g = load_graph(g_path);
  se_graph* sub = nullptr;
  int exceeded = 0;
  if (se_min_equivalent_subgraph(g.get(), k, budget, &sub, &exceeded) != SE_OK)
    die(kExitBadInput, se_last_error());
  GraphPtr sp(sub);
  if (exceeded) {
    if (json) std::cout << nlohmann::json{{"outcome", "budget"}}.dump() << "\n";
    else std::cout << "budget\n";
    return kExitBudget;
  }
  if (json) {
    nlohmann::json j{{"edges", se_graph_edge_count(sub)}, {"subgraph", serialize(sub)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << serialize(sub);
  }
  return 0;
}

int run_setcheck(const std::string& path, bool json) {
  std::string text = read_file(path);
  char* report = nullptr;
  int agreement = 0;
  if (se_setcheck(text.c_str(), json ? 1 : 0, &report, &agreement) != SE_OK)
    die(kExitBadInput, path + ": " + se_last_error());
  std::cout << owned_string(report);
  return agreement ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strong-equivalence decisions, witnesses and brute-force oracles for finite graphs"};
  app.require_subcommand(1);

  std::string prop_spec, g_path, h_path, file_path;
  int vertices = 4;
  int k = 1;
  std::uint64_t samples = 0, seed = 0, subset_budget = 1u << 20;
  bool json = false;
  BudgetFlags budget;

  auto* decide = app.add_subcommand("decide", "decide strong equivalence of two graphs");
  decide->add_option("--property", prop_spec, "ham|planar|subgraph:<file>|kcolor:<k>|edge2color|kconn:<k>|kconn-psi:<k>")->required();
  decide->add_option("G", g_path, "first graph file")->required();
  decide->add_option("H", h_path, "second graph file")->required();
  decide->add_flag("--json", json, "machine-readable output");

  auto* witness = app.add_subcommand("witness", "decide and print a separating extension");
  witness->add_option("--property", prop_spec, "property selector")->required();
  witness->add_option("G", g_path, "first graph file")->required();
  witness->add_option("H", h_path, "second graph file")->required();
  witness->add_flag("--json", json, "machine-readable output");

  auto* oracle = app.add_subcommand("oracle", "bounded brute-force search for a separating extension");
  oracle->add_option("--property", prop_spec, "property selector")->required();
  oracle->add_option("G", g_path, "first graph file")->required();
  oracle->add_option("H", h_path, "second graph file")->required();
  oracle->add_flag("--json", json, "machine-readable output");
  budget.attach(oracle);

  auto* reduce = app.add_subcommand("reduce", "instance reductions");
  auto* reduce_kcolor = reduce->add_subcommand("kcolor", "colorability-to-equivalence reduction");
  reduce_kcolor->add_option("--k", k, "number of colors (>= 3)")->required();
  reduce_kcolor->add_option("G", g_path, "input graph file")->required();
  reduce_kcolor->add_flag("--json", json, "machine-readable output");

  auto* crosscheck = app.add_subcommand("crosscheck", "deciders vs witnesses vs oracle over an instance family");
  crosscheck->add_option("--property", prop_spec, "property selector")->required();
  crosscheck->add_option("--vertices", vertices, "labels in the instance family (<= 6)");
  crosscheck->add_option("--sample", samples, "sampled pairs (0 = exhaustive)");
  crosscheck->add_option("--seed", seed, "sample seed");
  crosscheck->add_flag("--json", json, "one record per pair");
  budget.attach(crosscheck);

  auto* minsub = app.add_subcommand("min-subgraph", "smallest subgraph equivalent under kconn:<k>");
  minsub->add_option("--k", k, "connectivity parameter")->required();
  minsub->add_option("--budget", subset_budget, "cap on examined edge subsets");
  minsub->add_option("G", g_path, "input graph file")->required();
  minsub->add_flag("--json", json, "machine-readable output");

  auto* setcheck = app.add_subcommand("setcheck", "threshold-form classification of a subset family");
  setcheck->add_option("family", file_path, "subset family file")->required();
  setcheck->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (decide->parsed()) return run_decide(prop_spec, g_path, h_path, json);
    if (witness->parsed()) return run_witness(prop_spec, g_path, h_path, json);
    if (oracle->parsed()) return run_oracle(prop_spec, g_path, h_path, budget, json);
    if (reduce->parsed()) {
      if (!reduce_kcolor->parsed()) die(kExitUsage, "reduce needs a reduction name (kcolor)");
      return run_reduce_kcolor(k, g_path, json);
    }
    if (crosscheck->parsed())
      return run_crosscheck(prop_spec, vertices, samples, seed, budget, json);
    if (minsub->parsed()) return run_min_subgraph(k, g_path, subset_budget, json);
    if (setcheck->parsed()) return run_setcheck(file_path, json);
  } catch (const std::exception& e) {
    die(kExitInternal, e.what());
  }
  return kExitUsage;
}
