#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parw/cylinder.hpp"
#include "parw/weights.hpp"

namespace parw {

// Monotone single-valued table for a partial functional on binary strings:
// rho inside rho', both defined, forces Phi(rho) inside Phi(rho').
class MonotoneFunctionalTable {
 public:
  MonotoneFunctionalTable(std::map<BitString, BitString> entries, int depth_y,
                          int depth_x);
  const std::map<BitString, BitString>& entries() const { return entries_; }
  int depth_y() const { return depth_y_; }
  int depth_x() const { return depth_x_; }

 private:
  std::map<BitString, BitString> entries_;
  int depth_y_ = 0;
  int depth_x_ = 0;
};

// Depth-bounded indexed family sigma -> V_sigma of cylinder sets with
// per-cylinder enumeration timestamps. Structural soundness (children nested
// and disjoint) is a property checked by levin_validate, not assumed.
class FiniteLevinSystem {
 public:
  struct Entry {
    BitString cylinder;
    std::uint64_t stamp = 0;
  };

  FiniteLevinSystem(int depth_x, int depth_y)
      : depth_x_(depth_x), depth_y_(depth_y) {}

  int depth_x() const { return depth_x_; }
  int depth_y() const { return depth_y_; }

  void add_entry(const BitString& sigma, const BitString& cylinder,
                 std::uint64_t stamp);
  const std::vector<Entry>& entries(const BitString& sigma) const;
  // V_sigma as a cylinder set (exactly the listed members).
  CylinderSet set(const BitString& sigma) const;
  Rational measure(const BitString& sigma) const;
  const std::map<BitString, std::vector<Entry>>& all_entries() const {
    return entries_;
  }

 private:
  int depth_x_;
  int depth_y_;
  std::map<BitString, std::vector<Entry>> entries_;
};

// V_sigma = union of the minimal rho in the table's domain with
// Phi(rho) extending sigma, for every |sigma| <= depth_x.
FiniteLevinSystem levin_from_functional(const MonotoneFunctionalTable& phi);

struct LevinValidation {
  bool pass = true;
  std::vector<std::string> violations;
};

// Exact check of the children containment/disjointness properties and the
// derived nesting/incomparability consequences at every index.
LevinValidation levin_validate(const FiniteLevinSystem& v);

// Total positive caps r_sigma for |sigma| <= depth_x.
class CapAssignment {
 public:
  CapAssignment(std::map<BitString, Rational> caps, int depth_x);
  const Rational& cap(const BitString& sigma) const;
  int depth_x() const { return depth_x_; }

 private:
  std::map<BitString, Rational> caps_;
  int depth_x_;
};

// Measure-capped truncation: cylinders are processed in timestamp order and
// admitted along the longest prefix of their index whose caps all stay
// respected; a cylinder blocked at an ancestor never enters a descendant.
FiniteLevinSystem levin_truncate(const FiniteLevinSystem& v,
                                 const CapAssignment& r);

struct LevinMeasureTest {
  long level = 0;
  CylinderSet set;    // {sigma : mu(V_sigma) > 2^i w(sigma)}
  Rational pwt_value;
  Rational bound;     // 2^-i
  bool bound_ok = false;
};

LevinMeasureTest levin_measure_test(const FiniteLevinSystem& v,
                                    const WeightFunction& w, long i);

struct LevinPushforwardBound {
  std::optional<BitString> precondition_failure;  // mu(V_sigma) > 2^c w(sigma)
  Rational mu_union;    // mu of the union over the minimal elements of a
  Rational sum_parts;   // sum of the individual measures
  bool disjoint_sum_ok = false;
  Rational pwt_value;
  Rational bound;       // 2^c pwt_w(a)
  bool bound_ok = false;
  bool pass() const {
    return !precondition_failure && disjoint_sum_ok && bound_ok;
  }
};

// Union-measure identity and the 2^c pwt bound for the pushforward of a set
// through a (truncated) system.
LevinPushforwardBound levin_pushforward_bound(const FiniteLevinSystem& v,
                                              const CylinderSet& a,
                                              const WeightFunction& w, long c);

}  // namespace parw
