#include "core/setcore.hpp"

#include <algorithm>
#include <map>

namespace strongequiv::setcore {

FiniteUniverse::FiniteUniverse(std::vector<std::string> elements)
    : elements_(std::move(elements)) {
  if (elements_.size() > 16)
    fail(ErrorCode::TooLarge, "universe has more than 16 elements");
  std::set<std::string> seen;
  for (const std::string& e : elements_) {
    if (e.empty()) fail(ErrorCode::InvalidArgument, "empty element label");
    if (!seen.insert(e).second)
      fail(ErrorCode::InvalidArgument, "duplicate element '" + e + "'");
  }
}

int FiniteUniverse::position(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[i] == label) return i;
  fail(ErrorCode::InvalidArgument, "element '" + label + "' not in universe");
}

SubsetMask FiniteUniverse::mask_of(const std::set<std::string>& labels) const {
  SubsetMask m = 0;
  for (const std::string& l : labels) m |= SubsetMask(1) << position(l);
  return m;
}

std::set<std::string> FiniteUniverse::labels_of(SubsetMask mask) const {
  std::set<std::string> out;
  for (int i = 0; i < size(); ++i)
    if (mask & (SubsetMask(1) << i)) out.insert(elements_[i]);
  return out;
}

SubsetProperty::SubsetProperty(FiniteUniverse universe, const std::set<SubsetMask>& members)
    : universe_(std::move(universe)), member_(universe_.subset_count(), false) {
  for (SubsetMask m : members) {
    if (m >= universe_.subset_count())
      fail(ErrorCode::InvalidArgument, "member subset outside the universe");
    member_[m] = true;
  }
}

std::size_t SubsetProperty::member_count() const {
  return std::size_t(std::count(member_.begin(), member_.end(), true));
}

RelationTable RelationTable::total(FiniteUniverse universe) {
  std::vector<SubsetMask> rep(universe.subset_count(), 0);
  return RelationTable(std::move(universe), std::move(rep));
}

RelationTable RelationTable::from_representatives(FiniteUniverse universe,
                                                  std::vector<SubsetMask> rep) {
  if (rep.size() != universe.subset_count())
    fail(ErrorCode::InvalidArgument, "representative table has wrong size");
  // Normalize: the representative of a class is its smallest member.
  std::map<SubsetMask, SubsetMask> smallest;
  for (SubsetMask s = 0; s < rep.size(); ++s) {
    if (rep[s] >= rep.size())
      fail(ErrorCode::InvalidArgument, "representative outside the universe");
    auto [it, inserted] = smallest.try_emplace(rep[s], s);
    if (!inserted) it->second = std::min(it->second, s);
  }
  for (SubsetMask s = 0; s < rep.size(); ++s) rep[s] = smallest[rep[s]];
  return RelationTable(std::move(universe), std::move(rep));
}

std::size_t RelationTable::class_count() const {
  std::set<SubsetMask> reps(rep_.begin(), rep_.end());
  return reps.size();
}

bool RelationTable::refines(const RelationTable& other) const {
  if (!(universe_ == other.universe_)) return false;
  for (SubsetMask s = 0; s < rep_.size(); ++s)
    if (other.rep_[s] != other.rep_[rep_[s]]) return false;
  return true;
}

RelationTable RelationTable::intersect(const RelationTable& a, const RelationTable& b) {
  if (!(a.universe_ == b.universe_))
    fail(ErrorCode::InvalidArgument, "relations over different universes");
  std::vector<SubsetMask> rep(a.rep_.size());
  std::map<std::pair<SubsetMask, SubsetMask>, SubsetMask> cls;
  for (SubsetMask s = 0; s < rep.size(); ++s) {
    auto key = std::make_pair(a.rep_[s], b.rep_[s]);
    auto [it, inserted] = cls.try_emplace(key, s);
    rep[s] = it->second;
  }
  return RelationTable(a.universe_, std::move(rep));
}

RelationTable equiv_from_property(const SubsetProperty& prop) {
  const FiniteUniverse& u = prop.universe();
  SubsetMask count = u.subset_count();
  std::size_t members = prop.member_count();
  if (members == 0 || members == count) return RelationTable::total(u);

  SubsetMask in_rep = count, out_rep = count;
  for (SubsetMask s = 0; s < count; ++s) {
    if (prop.contains(s)) { in_rep = std::min(in_rep, s); }
    else { out_rep = std::min(out_rep, s); }
  }
  std::vector<SubsetMask> rep(count);
  for (SubsetMask s = 0; s < count; ++s) rep[s] = prop.contains(s) ? in_rep : out_rep;
  return RelationTable::from_representatives(u, std::move(rep));
}

RelationTable bounded_strengthen(const RelationTable& rel) {
  SubsetMask count = rel.universe().subset_count();
  // Two subsets are strongly related iff their rows of union-classes agree.
  std::map<std::vector<SubsetMask>, SubsetMask> first_with_signature;
  std::vector<SubsetMask> rep(count);
  std::vector<SubsetMask> sig(count);
  for (SubsetMask g = 0; g < count; ++g) {
    for (SubsetMask f = 0; f < count; ++f) sig[f] = rel.representative(g | f);
    auto [it, inserted] = first_with_signature.try_emplace(sig, g);
    rep[g] = it->second;
  }
  return RelationTable::from_representatives(rel.universe(), std::move(rep));
}

ThresholdForm classify_threshold_form(const SubsetProperty& prop) {
  const FiniteUniverse& u = prop.universe();
  SubsetMask count = u.subset_count();
  SubsetMask x = 0;
  for (int i = 0; i < u.size(); ++i)
    if (prop.contains(SubsetMask(1) << i)) x |= SubsetMask(1) << i;

  bool intersecting = true, subset = true;
  for (SubsetMask s = 0; s < count && (intersecting || subset); ++s) {
    bool in = prop.contains(s);
    if (in != ((s & x) != 0)) intersecting = false;
    if (in != ((s & ~x) == 0)) subset = false;
  }
  if (intersecting) return {ThresholdForm::Kind::Intersecting, x};
  if (subset) return {ThresholdForm::Kind::Subset, x};
  return {ThresholdForm::Kind::Neither, 0};
}

}  // namespace strongequiv::setcore
