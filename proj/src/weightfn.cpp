#include "parw/weightfn.hpp"

#include <functional>
#include <vector>

namespace parw {

namespace {

// All strings of length <= depth in canonical (lexicographic) order.
void for_each_string(int depth, const std::function<void(const BitString&)>& f,
                     const BitString& at = BitString()) {
  f(at);
  if (at.length() >= depth) return;
  for_each_string(depth, f, at.extended(0));
  for_each_string(depth, f, at.extended(1));
}

std::optional<BitString> table_convexity_violation(const WeightFunction& w,
                                                   int depth) {
  std::optional<BitString> hit;
  for_each_string(depth - 1, [&](const BitString& s) {
    if (hit) return;
    if (w.weight(s) > w.weight(s.extended(0)) + w.weight(s.extended(1)))
      hit = s;
  });
  return hit;
}

}  // namespace

void WeightFunction::check_depth(const BitString& sigma) const {
  if (sigma.length() > depth_)
    throw PreconditionError("weight function: domain depth " +
                            std::to_string(depth_) + " exceeded by " +
                            sigma.str());
}

WeightFunction WeightFunction::integer_exponents(std::map<BitString, long> f,
                                                 int depth) {
  WeightFunction w;
  w.mode_ = Mode::IntegerExponent;
  w.depth_ = depth;
  w.exps_ = std::move(f);
  for (const auto& [sigma, k] : w.exps_) {
    (void)k;
    if (sigma.length() > depth)
      throw PreconditionError("weight table entry beyond depth: " +
                              sigma.str());
  }
  for_each_string(depth, [&](const BitString& s) {
    if (!w.exps_.count(s))
      throw PreconditionError("weight table missing entry for " + s.str());
  });
  if (depth > 0) w.convex_violation_ = table_convexity_violation(w, depth);
  return w;
}

WeightFunction WeightFunction::rational_table(std::map<BitString, Rational> t,
                                              int depth) {
  WeightFunction w;
  w.mode_ = Mode::RationalTable;
  w.depth_ = depth;
  w.table_ = std::move(t);
  for (const auto& [sigma, v] : w.table_) {
    if (sigma.length() > depth)
      throw PreconditionError("weight table entry beyond depth: " +
                              sigma.str());
    if (v.sign() <= 0)
      throw PreconditionError("weight must be positive at " + sigma.str());
  }
  for_each_string(depth, [&](const BitString& s) {
    if (!w.table_.count(s))
      throw PreconditionError("weight table missing entry for " + s.str());
  });
  if (depth > 0) w.convex_violation_ = table_convexity_violation(w, depth);
  return w;
}

WeightFunction WeightFunction::length_scaled(const Rational& s) {
  if (s.sign() <= 0 || s > Rational(1))
    throw PreconditionError("length-scaled scale must lie in (0,1]");
  WeightFunction w;
  w.mode_ = Mode::LengthScaled;
  w.depth_ = kUnboundedDepth;
  w.scale_ = s;
  // ceil(s(n+1)) <= ceil(sn) + 1 holds for every s <= 1, so the family is
  // convex at all depths.
  return w;
}

Rational WeightFunction::weight(const BitString& sigma) const {
  auto k = exponent(sigma);
  if (k) return Rational::pow2(-*k);
  check_depth(sigma);
  return table_.at(sigma);
}

std::optional<long> WeightFunction::exponent(const BitString& sigma) const {
  check_depth(sigma);
  switch (mode_) {
    case Mode::IntegerExponent:
      return exps_.at(sigma);
    case Mode::LengthScaled: {
      // ceil(s * n) computed exactly.
      mpz_class num = scale_.raw().get_num() * sigma.length();
      mpz_class q;
      mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(),
                 scale_.raw().get_den().get_mpz_t());
      return q.get_si();
    }
    case Mode::RationalTable:
      return std::nullopt;
  }
  return std::nullopt;
}

ConvexityCheck is_convex(const WeightFunction& w, int depth) {
  if (depth > w.depth())
    throw PreconditionError("is_convex: depth exceeds weight domain");
  if (w.mode() == WeightFunction::Mode::LengthScaled) {
    // Per-length check of ceil(s(n+1)) <= ceil(sn) + 1.
    BitString s;
    for (int n = 0; n < depth; ++n) {
      if (*w.exponent(s.extended(0)) > *w.exponent(s) + 1)
        return {false, s};
      s = s.extended(0);
    }
    return {true, std::nullopt};
  }
  auto hit = [&]() -> std::optional<BitString> {
    std::optional<BitString> v;
    std::function<void(const BitString&)> walk = [&](const BitString& at) {
      if (v) return;
      if (w.weight(at) > w.weight(at.extended(0)) + w.weight(at.extended(1)))
        v = at;
      if (at.length() + 1 >= depth || v) return;
      walk(at.extended(0));
      walk(at.extended(1));
    };
    if (depth > 0) walk(BitString());
    return v;
  }();
  return {!hit.has_value(), hit};
}

}  // namespace parw
