#pragma once

#include <optional>
#include <string>

#include "core/graph.hpp"

namespace strongequiv {

// Selects which base property the equivalence relation is built from.
//
// The evaluated property per selector (used by witnesses and the oracle):
//   Hamiltonian  - has a hamiltonian cycle
//   Planarity    - is non-planar (the monotone property; the induced
//                  relation "both planar or both non-planar" is the same)
//   Subgraph     - contains a subgraph isomorphic to the pattern
//   KColor       - has at least one good k-coloring
//   Edge2Color   - is edge 2-colorable
//   KConn        - has a cutset of cardinality smaller than k
//   KConnPsi     - is not k-connected (cutset below k, or at most k vertices)
struct PropertySelector {
  enum class Kind { Hamiltonian, Planarity, Subgraph, KColor, Edge2Color, KConn, KConnPsi };

  Kind kind = Kind::Hamiltonian;
  int k = 0;      // KColor / KConn / KConnPsi
  Graph pattern;  // Subgraph

  static PropertySelector hamiltonian() { return of(Kind::Hamiltonian); }
  static PropertySelector planarity() { return of(Kind::Planarity); }
  static PropertySelector subgraph(Graph pattern);
  static PropertySelector kcolor(int k);
  static PropertySelector edge2color() { return of(Kind::Edge2Color); }
  static PropertySelector kconn(int k);
  static PropertySelector kconn_psi(int k);

  static PropertySelector of(Kind kind) {
    PropertySelector p;
    p.kind = kind;
    return p;
  }

  std::string describe() const;
};

enum class Verdict { Equivalent = 0, NotEquivalent = 1, Unknown = 2 };

enum class Side { First = 1, Second = 2 };

// A separating extension: exactly one of g|f, h|f has the property.
// `property_side` records which input that is; `construction` names the
// gadget that produced f.
struct Witness {
  Graph extension;
  Side property_side = Side::First;
  std::string construction;
};

struct DecisionOutcome {
  Verdict verdict = Verdict::Unknown;
  std::optional<Witness> witness;  // attached only on request
  std::string reason;              // set when verdict is Unknown

  static DecisionOutcome equivalent() { return {Verdict::Equivalent, std::nullopt, ""}; }
  static DecisionOutcome not_equivalent() { return {Verdict::NotEquivalent, std::nullopt, ""}; }
  static DecisionOutcome unknown(std::string reason) {
    return {Verdict::Unknown, std::nullopt, std::move(reason)};
  }
};

}  // namespace strongequiv
