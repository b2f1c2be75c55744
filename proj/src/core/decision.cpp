#include "core/decision.hpp"

#include "core/errors.hpp"

namespace strongequiv {

namespace {

int checked_k(int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be >= 1");
  return k;
}

}  // namespace

PropertySelector PropertySelector::subgraph(Graph pattern) {
  if (pattern.empty()) fail(ErrorCode::EmptyPattern, "empty pattern graph");
  PropertySelector p = of(Kind::Subgraph);
  p.pattern = std::move(pattern);
  return p;
}

PropertySelector PropertySelector::kcolor(int k) {
  PropertySelector p = of(Kind::KColor);
  p.k = checked_k(k);
  return p;
}

PropertySelector PropertySelector::kconn(int k) {
  PropertySelector p = of(Kind::KConn);
  p.k = checked_k(k);
  return p;
}

PropertySelector PropertySelector::kconn_psi(int k) {
  PropertySelector p = of(Kind::KConnPsi);
  p.k = checked_k(k);
  return p;
}

std::string PropertySelector::describe() const {
  switch (kind) {
    case Kind::Hamiltonian: return "ham";
    case Kind::Planarity: return "planar";
    case Kind::Subgraph:
      return "subgraph(" + std::to_string(pattern.edge_count()) + " edges)";
    case Kind::KColor: return "kcolor:" + std::to_string(k);
    case Kind::Edge2Color: return "edge2color";
    case Kind::KConn: return "kconn:" + std::to_string(k);
    case Kind::KConnPsi: return "kconn-psi:" + std::to_string(k);
  }
  return "?";
}

}  // namespace strongequiv
