#include "parw/cylinder.hpp"

#include <algorithm>

namespace parw {

CylinderSet::CylinderSet(std::vector<BitString> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (const auto& m : members_) depth_ = std::max(depth_, m.length());
}

bool CylinderSet::contains(const BitString& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool CylinderSet::is_prefix_free() const {
  // Sorted order puts a prefix immediately before the block of its
  // extensions, so adjacent checks suffice.
  for (size_t i = 0; i + 1 < members_.size(); ++i)
    if (members_[i].is_prefix_of(members_[i + 1])) return false;
  return true;
}

CylinderSet CylinderSet::minimal_elements() const {
  std::vector<BitString> keep;
  for (const auto& m : members_) {
    if (!keep.empty() && keep.back().is_prefix_of(m)) continue;
    keep.push_back(m);
  }
  return CylinderSet(std::move(keep));
}

Rational CylinderSet::measure() const {
  CylinderSet min = minimal_elements();
  Rational total;
  for (const auto& m : min.members()) total += Rational::pow2(-m.length());
  return total;
}

CylinderSet CylinderSet::union_with(const CylinderSet& o) const {
  std::vector<BitString> all = members_;
  all.insert(all.end(), o.members_.begin(), o.members_.end());
  return CylinderSet(std::move(all));
}

CylinderSet CylinderSet::with(const BitString& s) const {
  std::vector<BitString> all = members_;
  all.push_back(s);
  return CylinderSet(std::move(all));
}

CylinderSet CylinderSet::restricted_to_extensions(
    const BitString& sigma) const {
  std::vector<BitString> out;
  for (const auto& m : members_)
    if (sigma.is_prefix_of(m)) out.push_back(m);
  return CylinderSet(std::move(out));
}

namespace {

// The cylinder of v is covered by b, given that no proper ancestor of v is a
// member of b (callers establish that before recursing).
bool covered_below(const BitString& v, const CylinderSet& b) {
  if (b.contains(v)) return true;
  if (v.length() >= b.depth()) return false;
  return covered_below(v.extended(0), b) && covered_below(v.extended(1), b);
}

}  // namespace

bool cylinder_covered(const BitString& sigma, const CylinderSet& b) {
  for (int n = 0; n < sigma.length(); ++n)
    if (b.contains(sigma.prefix(n))) return true;
  return covered_below(sigma, b);
}

bool covers(const CylinderSet& a, const CylinderSet& b) {
  for (const auto& m : a.minimal_elements().members())
    if (!cylinder_covered(m, b)) return false;
  return true;
}

bool region_equal(const CylinderSet& a, const CylinderSet& b) {
  return covers(a, b) && covers(b, a);
}

bool region_disjoint(const CylinderSet& a, const CylinderSet& b) {
  for (const auto& x : a.minimal_elements().members())
    for (const auto& y : b.minimal_elements().members())
      if (x.comparable_with(y)) return false;
  return true;
}

}  // namespace parw
