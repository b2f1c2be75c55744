#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/decision.hpp"
#include "core/graph.hpp"

namespace strongequiv::oracle {

// Caps for the bounded refutation search. Enumeration is exhaustive up to
// the caps and deterministic in canonical edge order.
struct OracleBudget {
  int fresh_count = 0;
  std::uint64_t max_edges = 0;
  std::uint64_t max_candidates = 0;
};

// Per-property defaults sized so that every gadget the witness module emits
// fits inside the searched space; max_edges is the complete graph on the
// pool and max_candidates a generous cap.
OracleBudget default_budget(const PropertySelector& prop, const Graph& g, const Graph& h);

enum class RefutationKind {
  Separated,        // a separating extension was found
  ExhaustedAbsent,  // no extension within the caps separates (bounded evidence)
  BudgetExceeded,   // candidate cap hit before exhaustion; inconclusive
};

struct Refutation {
  RefutationKind kind = RefutationKind::BudgetExceeded;
  std::optional<Graph> separating;
  std::uint64_t candidates_tried = 0;
};

// Exhaustive search for an extension F over V(g) | V(h) plus fresh vertices
// with |F| <= max_edges such that exactly one of g|F, h|F has the property.
Refutation refute_bounded(const PropertySelector& prop, const Graph& g, const Graph& h,
                          const OracleBudget& budget);

// All graphs over the first `vertices` labels, or a seeded sample of pairs.
struct InstanceFamily {
  int vertices = 4;
  std::uint64_t sample_pairs = 0;  // 0 = exhaustive over all unordered pairs
  std::uint64_t seed = 0;
};

struct PairCheck {
  std::string g, h;          // compact edge lists
  Verdict verdict = Verdict::Unknown;
  std::string check;         // "witness-verified" | "oracle-exhausted" | "skipped" | failure kind
  bool agreement = true;
};

struct CrosscheckReport {
  std::string property;
  int vertices = 0;
  bool exhaustive = true;
  std::uint64_t pairs = 0;
  std::uint64_t equivalent = 0;
  std::uint64_t not_equivalent = 0;
  std::uint64_t unknown = 0;
  std::vector<std::string> violations;
  std::vector<PairCheck> records;  // filled when keep_records

  bool clean() const { return violations.empty(); }
  std::string render_text() const;
  std::string render_json() const;  // one record per pair plus a summary record
};

// For every pair in the family: NotEquivalent verdicts must come with a
// verifying witness, Equivalent verdicts with oracle exhaustion. Violations
// are report content, not errors.
CrosscheckReport crosscheck(const PropertySelector& prop, const InstanceFamily& family,
                            const OracleBudget& budget, bool keep_records = false);

struct CompleteCriterionEntry {
  int vertices = 0;
  RefutationKind kind = RefutationKind::BudgetExceeded;
  std::optional<Graph> separating;
};

struct CompleteCriterionReport {
  std::string property;
  std::vector<CompleteCriterionEntry> entries;
  bool all_separated = false;
  std::string render_text() const;
  std::string render_json() const;
};

// Runs refute_bounded on (K, K-e) for each complete graph K on 2..max
// vertices, one representative edge per graph. For hamiltonicity separation
// everywhere certifies the identity-relation behaviour at this scale.
CompleteCriterionReport complete_graph_criterion(const PropertySelector& prop,
                                                 int max_vertices,
                                                 const OracleBudget& budget);

// Compact one-line rendering "a-b,c-d" used in reports.
std::string compact(const Graph& g);

}  // namespace strongequiv::oracle
