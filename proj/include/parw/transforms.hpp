#pragma once

#include <map>
#include <memory>
#include <vector>

#include "parw/cylinder.hpp"
#include "parw/weights.hpp"

namespace parw {

// Indexed family of computable trees: prefix-closed cylinder sets, each
// containing the empty string. Positions are 1-based, matching the paper's
// positive indexing and the `[tree i]` file sections.
class TreeFamily {
 public:
  explicit TreeFamily(std::vector<CylinderSet> trees);
  int size() const { return static_cast<int>(trees_.size()); }
  const CylinderSet& tree(int i) const;  // i in [1, size]

 private:
  std::vector<CylinderSet> trees_;
};

// f0 = min(max(f, 0), 2|sigma|); returns floor(f0) + 1, the canonical
// integer strictly inside (f0, f0 + 2).
long integer_normalize(const Rational& f_value, const BitString& sigma);

// Same, but f is only known to lie in [f_lo, f_hi]. Errors when the bounds
// do not pin down floor(f0).
long integer_normalize_interval(const Rational& f_lo, const Rational& f_hi,
                                const BitString& sigma);

struct PushforwardResult {
  CylinderSet image;       // shortest prefixes rho with w(rho) <= w(sigma)
  bool in_increasing_set;  // image lies in I(f)
  bool covers_input;
  bool dwt_nonincreasing;
  bool pwt_nonincreasing;
  bool pass() const {
    return in_increasing_set && covers_input && dwt_nonincreasing &&
           pwt_nonincreasing;
  }
};

// Maps each member to its shortest prefix of no larger weight and checks the
// four posts on the image.
PushforwardResult increasing_pushforward(const CylinderSet& a,
                                         const WeightFunction& w);

// sigma in I(f): every proper prefix has strictly larger weight.
bool in_increasing_set(const BitString& sigma, const WeightFunction& w);

struct FgBoundReport {
  std::map<long, CylinderSet> slices;  // n -> P_n = {sigma in A | f(sigma)=n}
  Rational dwt_g_via_slices;           // sum_n 2^-h(n) dwt_f(P_n)
  Rational dwt_g_direct;               // sum over A of 2^-(f+h(f))
  Rational pwt_f;
  Rational bound;  // 2^c * pwt_f
  bool slices_prefix_free = true;
  bool identity_ok = false;
  bool bound_ok = false;
  bool pass() const { return slices_prefix_free && identity_ok && bound_ok; }
};

// Certifies dwt_g(A) = sum_n 2^-h(n) dwt_f(P_n) <= 2^c pwt_f(A) for
// g = f + h(f). Preconditions: integer-exponent w, A inside I(f), h
// nondecreasing on the occurring exponents, sum of 2^-h(n) <= 2^c.
FgBoundReport fg_bound_check(const CylinderSet& a, const WeightFunction& wf,
                             const std::map<long, long>& h, long c);

// Built-in family h(x) = ceil((1+eps) log2 x), defined for x >= 1.
long h_log_scaled(long x, const Rational& eps);
// The same family as an explicit map on [1, max_exponent].
std::map<long, long> h_log_scaled_table(long max_exponent,
                                        const Rational& eps);

// Weight exponent derived from a tree family: 1 where the level function is
// flat across the last bit, 2|sigma| where it jumps. The level of tau is the
// least positive i with i = |tau| or tau in T_i; the empty string gets
// exponent 1.
long sigma02_weight_exponent(const TreeFamily& trees, const BitString& sigma);

struct RationalInterval {
  Rational lo, hi;
};

// Precision-query oracle for a (possibly irrational) weight function:
// returns a rational interval of width <= precision containing w(sigma).
// Queries must be idempotent per (sigma, precision).
class WeightOracle {
 public:
  virtual ~WeightOracle() = default;
  virtual RationalInterval query(const BitString& sigma,
                                 const Rational& precision) const = 0;
};

// Zero-width intervals around an exact rational weight function.
class ExactWeightOracle : public WeightOracle {
 public:
  explicit ExactWeightOracle(WeightFunction w) : w_(std::move(w)) {}
  RationalInterval query(const BitString& sigma,
                         const Rational& precision) const override;

 private:
  WeightFunction w_;
};

// w(sigma) = 2^(-s|sigma|) for rational s in (0,1], irrational whenever
// s|sigma| is not an integer. Bounds come from integer root extraction.
class PowerScaledOracle : public WeightOracle {
 public:
  explicit PowerScaledOracle(const Rational& s);
  RationalInterval query(const BitString& sigma,
                         const Rational& precision) const override;
  const Rational& scale() const { return s_; }

 private:
  Rational s_;
};

// Certified bounds on 2^(-a) for rational a >= 0, width <= 2^(-precision).
RationalInterval pow2_neg_bounds(const Rational& a, long precision);

// Builds a rational, convex weight table in the band
// w(sigma) 2^(-eps) < out(sigma) < w(sigma) for all |sigma| <= depth.
// Per-depth sub-bands tighten geometrically so that children sums always
// dominate the parent choice; each value is the smallest-denominator dyadic
// nearest the certified sub-band's midpoint.
WeightFunction convex_rationalize(const WeightOracle& oracle,
                                  const Rational& eps, int depth);

}  // namespace parw
