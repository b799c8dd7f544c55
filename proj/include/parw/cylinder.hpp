#pragma once

#include <vector>

#include "parw/bitstring.hpp"
#include "parw/rational.hpp"

namespace parw {

// Finite set of binary strings, denoting the finite union of the cylinders
// of its members. Members are kept sorted and deduplicated.
class CylinderSet {
 public:
  CylinderSet() = default;
  explicit CylinderSet(std::vector<BitString> members);

  const std::vector<BitString>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  size_t size() const { return members_.size(); }
  // Max member length; 0 for the empty set.
  int depth() const { return depth_; }

  bool contains(const BitString& s) const;
  bool is_prefix_free() const;

  // The set of minimal elements; prefix-free and denoting the same region.
  CylinderSet minimal_elements() const;

  // Fair-coin measure of the denoted region.
  Rational measure() const;

  CylinderSet union_with(const CylinderSet& o) const;
  CylinderSet with(const BitString& s) const;
  // Members extending sigma (used for semimeasure restrictions).
  CylinderSet restricted_to_extensions(const BitString& sigma) const;

 private:
  std::vector<BitString> members_;
  int depth_ = 0;
};

// True iff the region of a is contained in the region of b, decided exactly
// by trie recursion down to depth(b).
bool covers(const CylinderSet& a, const CylinderSet& b);

// Region of {sigma} contained in the region of b.
bool cylinder_covered(const BitString& sigma, const CylinderSet& b);

bool region_equal(const CylinderSet& a, const CylinderSet& b);
bool region_disjoint(const CylinderSet& a, const CylinderSet& b);

}  // namespace parw
