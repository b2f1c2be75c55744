#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace strongequiv::setcore {

// Subsets of a universe are bitmasks over the universe's element order.
using SubsetMask = std::uint32_t;

// An ordered list of distinct element labels, at most 16 of them so that
// exhaustive iteration over all subsets stays cheap.
class FiniteUniverse {
public:
  explicit FiniteUniverse(std::vector<std::string> elements);

  int size() const { return int(elements_.size()); }
  SubsetMask subset_count() const { return SubsetMask(1) << size(); }
  const std::string& element(int i) const { return elements_[i]; }
  int position(const std::string& label) const;

  SubsetMask mask_of(const std::set<std::string>& labels) const;
  std::set<std::string> labels_of(SubsetMask mask) const;

  bool operator==(const FiniteUniverse&) const = default;

private:
  std::vector<std::string> elements_;
};

// A membership test over the subsets of a finite universe.
class SubsetProperty {
public:
  SubsetProperty(FiniteUniverse universe, const std::set<SubsetMask>& members);

  const FiniteUniverse& universe() const { return universe_; }
  bool contains(SubsetMask s) const { return member_[s]; }
  std::size_t member_count() const;

private:
  FiniteUniverse universe_;
  std::vector<bool> member_;
};

// An equivalence relation over all subsets of a universe, stored as the
// map subset -> smallest subset of its class in bitmask order.
class RelationTable {
public:
  static RelationTable total(FiniteUniverse universe);
  static RelationTable from_representatives(FiniteUniverse universe,
                                            std::vector<SubsetMask> rep);

  const FiniteUniverse& universe() const { return universe_; }
  SubsetMask representative(SubsetMask s) const { return rep_[s]; }
  bool related(SubsetMask a, SubsetMask b) const { return rep_[a] == rep_[b]; }
  std::size_t class_count() const;

  // True when every class of *this lies inside one class of other.
  bool refines(const RelationTable& other) const;

  static RelationTable intersect(const RelationTable& a, const RelationTable& b);

  bool operator==(const RelationTable&) const = default;

private:
  RelationTable(FiniteUniverse universe, std::vector<SubsetMask> rep)
      : universe_(std::move(universe)), rep_(std::move(rep)) {}

  FiniteUniverse universe_;
  std::vector<SubsetMask> rep_;
};

// The two-class relation {property, complement}; single-class total relation
// when the property is empty or total.
RelationTable equiv_from_property(const SubsetProperty& prop);

// G and H are related in the result iff G|F and H|F are related in rel for
// every subset F of the universe. Always a refinement of rel.
RelationTable bounded_strengthen(const RelationTable& rel);

struct ThresholdForm {
  enum class Kind { Intersecting, Subset, Neither };
  Kind kind = Kind::Neither;
  SubsetMask x = 0;  // witness set, meaningful unless Neither
};

// Recognizes properties of the form {S : S n X != {}} or {S : S <= X}; these
// are exactly the properties whose induced relation is its own strengthening.
ThresholdForm classify_threshold_form(const SubsetProperty& prop);

}  // namespace strongequiv::setcore
