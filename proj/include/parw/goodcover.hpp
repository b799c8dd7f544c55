#pragma once

#include <vector>

#include "parw/weights.hpp"

namespace parw {

// Incremental good-cover construction for a convex weight function. The
// invariant maintained by extend_cover: accepted covers the processed set
// and pwt(accepted) <= vwt(processed).
struct CoverState {
  CylinderSet accepted;              // the growing cover B
  std::vector<BitString> processed;  // enumeration order of the input
};

// One step: skip if sigma is already covered; otherwise add the prefix tau
// of sigma minimizing dwt(minimal_elements(accepted + tau)), shortest tau on
// ties.
CoverState extend_cover(const CoverState& state, const BitString& sigma,
                        const WeightFunction& w);

// Folds extend_cover over the stream, starting from the empty state.
CylinderSet build_cover(const std::vector<BitString>& stream,
                        const WeightFunction& w);

struct GoodCoverReport {
  bool covers_ok = false;    // region of a inside region of b
  bool weight_ok = false;    // pwt(b) <= vwt(a)
  Rational vwt_a, vwt_b, dwt_b_hat, pwt_b;
  bool chain_equal = false;  // vwt(a) = vwt(b) = dwt(b-hat) = pwt(b)
  bool pass() const { return covers_ok && weight_ok; }
};

// Independent certification of the good-cover property; recomputes vwt from
// scratch rather than trusting the construction's invariant. With
// use_bruteforce the vehement weights come from the exhaustive oracle
// (bound brute_b) instead of the convex dynamic program.
GoodCoverReport verify_good_cover(const CylinderSet& a, const CylinderSet& b,
                                  const WeightFunction& w,
                                  bool use_bruteforce = false,
                                  int brute_b = 2);

}  // namespace parw
