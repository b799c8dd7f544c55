#pragma once

#include <map>
#include <optional>

#include "parw/bitstring.hpp"
#include "parw/cylinder.hpp"
#include "parw/errors.hpp"
#include "parw/rational.hpp"

namespace parw {

// Positive weight assignment sigma -> w(sigma), the exact-rational view of a
// weight exponent function (w = 2^-f). Three modes:
//   integer-exponent: explicit table sigma -> f(sigma) with integer f,
//   rational-table:   explicit table sigma -> w(sigma) with rational w > 0,
//   length-scaled(s): built-in family with exponent ceil(s*|sigma|) for
//                     rational s in (0,1].
// Tables are total up to their depth D; querying beyond D is an error,
// never an extrapolation. Values are immutable after construction.
class WeightFunction {
 public:
  enum class Mode { IntegerExponent, RationalTable, LengthScaled };

  static WeightFunction integer_exponents(std::map<BitString, long> f,
                                          int depth);
  static WeightFunction rational_table(std::map<BitString, Rational> w,
                                       int depth);
  static WeightFunction length_scaled(const Rational& s);
  // w(sigma) = 2^-|sigma|, i.e. length-scaled with s = 1.
  static WeightFunction dyadic_length() { return length_scaled(Rational(1)); }

  Mode mode() const { return mode_; }
  int depth() const { return depth_; }

  Rational weight(const BitString& sigma) const;
  // f(sigma) = -log2 w(sigma); available in the integer-exponent modes.
  std::optional<long> exponent(const BitString& sigma) const;
  bool has_exponent_view() const { return mode_ != Mode::RationalTable; }

  // Convexity (w(sigma) <= w(sigma0) + w(sigma1)) over the whole domain,
  // decided at construction.
  bool convex() const { return !convex_violation_.has_value(); }
  const std::optional<BitString>& convexity_violation() const {
    return convex_violation_;
  }

  const std::map<BitString, long>& exponent_table() const { return exps_; }
  const std::map<BitString, Rational>& table() const { return table_; }
  const Rational& scale() const { return scale_; }

  static constexpr int kUnboundedDepth = 1 << 24;

 private:
  WeightFunction() = default;
  void check_depth(const BitString& sigma) const;

  Mode mode_ = Mode::LengthScaled;
  int depth_ = 0;
  std::map<BitString, long> exps_;
  std::map<BitString, Rational> table_;
  Rational scale_ = Rational(1);
  std::optional<BitString> convex_violation_;
};

struct ConvexityCheck {
  bool convex = true;
  std::optional<BitString> violation;
};

// Checks w(sigma) <= w(sigma0) + w(sigma1) for all |sigma| < depth and
// reports the first violation in canonical order.
ConvexityCheck is_convex(const WeightFunction& w, int depth);

}  // namespace parw
