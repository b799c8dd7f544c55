#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "parw/cylinder.hpp"
#include "parw/weightfn.hpp"

namespace parw {

enum class WeightMethod {
  Sum,
  AntichainDp,
  ConvexCoverDp,
  DepthBounded,
  BruteForce,
};

std::string to_string(WeightMethod m);

// A weight value together with the antichain or cover certifying it.
struct WeightReport {
  Rational value;
  CylinderSet witness;
  WeightMethod method = WeightMethod::Sum;
  std::optional<int> depth_bound;
};

// Direct weight: sum of w(sigma) over the members of a.
Rational dwt(const CylinderSet& a, const WeightFunction& w);

// Prefix-free weight: max of dwt over prefix-free subsets of a, computed by
// the max-weight-antichain dynamic program on the trie of a. The witness is
// one maximizing antichain; ties prefer the node over its descendants.
WeightReport pwt(const CylinderSet& a, const WeightFunction& w);

// Vehement weight, exact for convex w: min of dwt over covers of a, by the
// min-cost-cover dynamic program that never splits below a required node.
// Ties prefer covering at the shorter string.
WeightReport vwt_convex(const CylinderSet& a, const WeightFunction& w);

// Min dwt over covers whose elements have length <= depth(a) + k. An upper
// bound on the vehement weight for arbitrary w, nonincreasing in k.
WeightReport vwt_depth_bounded(const CylinderSet& a, const WeightFunction& w,
                               int k);

inline constexpr std::uint64_t kBruteForceGuard = std::uint64_t(1) << 24;

// Independent oracle: exhaustive backtracking over every prefix-free cover
// built from strings of length <= depth(a) + b, with no convexity reasoning.
// Refuses instances whose enumeration estimate exceeds the guard.
WeightReport vwt_bruteforce(const CylinderSet& a, const WeightFunction& w,
                            int b,
                            std::uint64_t search_guard = kBruteForceGuard);

}  // namespace parw
