#include "parw/transforms.hpp"

#include <algorithm>
#include <functional>

namespace parw {

TreeFamily::TreeFamily(std::vector<CylinderSet> trees)
    : trees_(std::move(trees)) {
  for (size_t i = 0; i < trees_.size(); ++i) {
    const auto& t = trees_[i];
    if (!t.contains(BitString()))
      throw PreconditionError("tree " + std::to_string(i + 1) +
                              " does not contain the empty string");
    for (const auto& m : t.members())
      for (int n = 0; n < m.length(); ++n)
        if (!t.contains(m.prefix(n)))
          throw PreconditionError("tree " + std::to_string(i + 1) +
                                  " is not prefix-closed at " + m.str());
  }
}

const CylinderSet& TreeFamily::tree(int i) const {
  if (i < 1 || i > size())
    throw PreconditionError("tree index " + std::to_string(i) +
                            " out of range");
  return trees_[static_cast<size_t>(i - 1)];
}

namespace {

Rational clamp_f0(const Rational& f, const BitString& sigma) {
  Rational v = std::max(f, Rational(0));
  return std::min(v, Rational(2L * sigma.length()));
}

}  // namespace

long integer_normalize(const Rational& f_value, const BitString& sigma) {
  return clamp_f0(f_value, sigma).floor_long() + 1;
}

long integer_normalize_interval(const Rational& f_lo, const Rational& f_hi,
                                const BitString& sigma) {
  if (f_lo > f_hi)
    throw PreconditionError("integer_normalize: empty bound interval");
  long lo = clamp_f0(f_lo, sigma).floor_long();
  long hi = clamp_f0(f_hi, sigma).floor_long();
  if (lo != hi)
    throw PreconditionError(
        "integer_normalize: bounds too loose to certify the band");
  return lo + 1;
}

bool in_increasing_set(const BitString& sigma, const WeightFunction& w) {
  Rational ws = w.weight(sigma);
  for (int n = 0; n < sigma.length(); ++n)
    if (w.weight(sigma.prefix(n)) <= ws) return false;
  return true;
}

PushforwardResult increasing_pushforward(const CylinderSet& a,
                                         const WeightFunction& w) {
  std::vector<BitString> image;
  for (const auto& sigma : a.members()) {
    Rational ws = w.weight(sigma);
    for (int n = 0; n <= sigma.length(); ++n) {
      BitString rho = sigma.prefix(n);
      if (w.weight(rho) <= ws) {
        image.push_back(rho);
        break;
      }
    }
  }
  PushforwardResult out;
  out.image = CylinderSet(std::move(image));
  out.in_increasing_set = true;
  for (const auto& m : out.image.members())
    if (!in_increasing_set(m, w)) out.in_increasing_set = false;
  out.covers_input = covers(a, out.image);
  out.dwt_nonincreasing = dwt(out.image, w) <= dwt(a, w);
  out.pwt_nonincreasing = pwt(out.image, w).value <= pwt(a, w).value;
  return out;
}

FgBoundReport fg_bound_check(const CylinderSet& a, const WeightFunction& wf,
                             const std::map<long, long>& h, long c) {
  if (!wf.has_exponent_view())
    throw PreconditionError("fg_bound_check: integer-exponent weight required");
  for (const auto& sigma : a.members())
    if (!in_increasing_set(sigma, wf))
      throw PreconditionError(
          "fg_bound_check: set not inside the increasing set (at " +
          sigma.str() + ")");
  long prev_key = 0, prev_val = 0;
  bool first = true;
  for (const auto& [n, hn] : h) {
    if (hn < 0)
      throw PreconditionError("fg_bound_check: h must be nonnegative");
    if (!first && hn < prev_val)
      throw PreconditionError("fg_bound_check: h decreasing between " +
                              std::to_string(prev_key) + " and " +
                              std::to_string(n));
    prev_key = n;
    prev_val = hn;
    first = false;
  }

  FgBoundReport rep;
  std::map<long, std::vector<BitString>> slices;
  for (const auto& sigma : a.members())
    slices[*wf.exponent(sigma)].push_back(sigma);

  Rational h_mass;
  for (const auto& [n, members] : slices) {
    auto it = h.find(n);
    if (it == h.end())
      throw PreconditionError("fg_bound_check: h undefined at exponent " +
                              std::to_string(n));
    h_mass += Rational::pow2(-it->second);
  }
  if (h_mass > Rational::pow2(c))
    throw PreconditionError(
        "fg_bound_check: sum of 2^-h(n) over occurring exponents exceeds 2^c");

  for (auto& [n, members] : slices) {
    CylinderSet p(std::move(members));
    if (!p.is_prefix_free()) {
      rep.slices_prefix_free = false;
      throw std::logic_error(
          "fg_bound_check: slice not prefix-free despite increasing-set "
          "precondition");
    }
    rep.dwt_g_via_slices += Rational::pow2(-h.at(n)) * dwt(p, wf);
    rep.slices.emplace(n, std::move(p));
  }
  for (const auto& sigma : a.members()) {
    long f = *wf.exponent(sigma);
    rep.dwt_g_direct += Rational::pow2(-(f + h.at(f)));
  }
  rep.pwt_f = pwt(a, wf).value;
  rep.bound = Rational::pow2(c) * rep.pwt_f;
  rep.identity_ok = rep.dwt_g_via_slices == rep.dwt_g_direct;
  rep.bound_ok = rep.dwt_g_via_slices <= rep.bound;
  return rep;
}

long h_log_scaled(long x, const Rational& eps) {
  if (x < 1) throw PreconditionError("h_log_scaled: needs x >= 1");
  if (eps.sign() < 0) throw PreconditionError("h_log_scaled: negative eps");
  // Smallest m with 2^(m q) >= x^(q + p) where eps = p/q.
  mpz_class p = eps.raw().get_num();
  mpz_class q = eps.raw().get_den();
  mpz_class rhs;
  mpz_pow_ui(rhs.get_mpz_t(), mpz_class(x).get_mpz_t(),
             mpz_class(p + q).get_ui());
  long m = 0;
  mpz_class lhs(1);
  mpz_class step;
  mpz_ui_pow_ui(step.get_mpz_t(), 2, q.get_ui());
  while (lhs < rhs) {
    lhs *= step;
    ++m;
  }
  return m;
}

std::map<long, long> h_log_scaled_table(long max_exponent,
                                        const Rational& eps) {
  std::map<long, long> h;
  for (long n = 1; n <= max_exponent; ++n) h[n] = h_log_scaled(n, eps);
  return h;
}

long sigma02_weight_exponent(const TreeFamily& trees, const BitString& sigma) {
  if (sigma.length() == 0) return 1;
  auto level = [&](const BitString& tau) -> long {
    for (long i = 1;; ++i) {
      if (i == tau.length()) return i;
      if (i > trees.size())
        throw PreconditionError(
            "sigma02_weight_exponent: tree family too short to determine the "
            "level of " + tau.str());
      if (trees.tree(static_cast<int>(i)).contains(tau)) return i;
    }
  };
  long h_parent = level(sigma.prefix(sigma.length() - 1));
  long h_self = level(sigma);
  return h_parent == h_self ? 1 : 2L * sigma.length();
}

RationalInterval ExactWeightOracle::query(const BitString& sigma,
                                          const Rational&) const {
  Rational v = w_.weight(sigma);
  return {v, v};
}

PowerScaledOracle::PowerScaledOracle(const Rational& s) : s_(s) {
  if (s.sign() <= 0 || s > Rational(1))
    throw PreconditionError("PowerScaledOracle: scale must lie in (0,1]");
}

RationalInterval pow2_neg_bounds(const Rational& a, long precision) {
  if (a.sign() < 0)
    throw PreconditionError("pow2_neg_bounds: exponent must be >= 0");
  // 2^(M-a) = (2^(Mq-p))^(1/q) with a = p/q; truncated q-th root brackets it.
  long m = precision + a.floor_long() + 1;
  mpz_class p = a.raw().get_num();
  mpz_class q = a.raw().get_den();
  mpz_class e = mpz_class(m) * q - p;
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, mpz_get_ui(e.get_mpz_t()));
  mpz_class root;
  mpz_root(root.get_mpz_t(), big.get_mpz_t(), q.get_ui());
  Rational scale = Rational::pow2(-m);
  Rational lo = Rational(mpq_class(root)) * scale;
  Rational hi = Rational(mpq_class(root + 1)) * scale;
  return {lo, hi};
}

RationalInterval PowerScaledOracle::query(const BitString& sigma,
                                          const Rational& precision) const {
  Rational a = s_ * Rational(sigma.length());
  if (a.raw().get_den() == 1) {
    Rational v = Rational::pow2(-a.floor_long());
    return {v, v};
  }
  long bits = 1;
  while (Rational::pow2(-bits) > precision) ++bits;
  return pow2_neg_bounds(a, bits);
}

namespace {

// Smallest-denominator dyadic inside the open interval (lo, hi), nearest the
// midpoint at that denominator; smaller numerator wins ties.
Rational simplest_dyadic_between(const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / Rational(2);
  for (long k = 0;; ++k) {
    Rational step = Rational::pow2(-k);
    long first = (lo / step).floor_long() + 1;
    std::optional<Rational> pick;
    for (long m = first; m < first + 4; ++m) {
      Rational cand = Rational(m) * step;
      if (cand <= lo) continue;
      if (cand >= hi) break;
      if (!pick) {
        pick = cand;
        continue;
      }
      Rational d_new = cand > mid ? cand - mid : mid - cand;
      Rational d_old = *pick > mid ? *pick - mid : mid - *pick;
      if (d_new < d_old) pick = cand;
    }
    if (pick) return *pick;
    if (k > 4096)
      throw std::logic_error("simplest_dyadic_between: no dyadic found");
  }
}

}  // namespace

WeightFunction convex_rationalize(const WeightOracle& oracle,
                                  const Rational& eps, int depth) {
  if (eps.sign() <= 0)
    throw PreconditionError("convex_rationalize: eps must be positive");
  // Sub-band exponent offsets a_d = eps (1/2 + 2^-(d+1)), strictly
  // decreasing with a_0 = eps; assigning inside (w 2^-a_d, w 2^-a_{d+1})
  // makes the output convex whenever the oracle's weight function is.
  auto offset = [&](int d) {
    return eps * (Rational(1, 2) + Rational::pow2(-(d + 1)));
  };
  constexpr int kMaxRefinements = 240;

  std::map<BitString, Rational> table;
  std::function<void(const BitString&)> assign = [&](const BitString& sigma) {
    int d = sigma.length();
    Rational a_hi = offset(d);      // lower band edge exponent
    Rational a_lo = offset(d + 1);  // upper band edge exponent
    Rational p = Rational::pow2(-4);
    for (int iter = 0;; ++iter) {
      if (iter >= kMaxRefinements)
        throw PreconditionError(
            "convex_rationalize: precision schedule exhausted before the band "
            "at " + sigma.str() + " could be certified");
      RationalInterval w = oracle.query(sigma, p);
      if (w.lo.sign() > 0) {
        long bits = 5 + iter;
        Rational lcert = w.hi * pow2_neg_bounds(a_hi, bits).hi;
        Rational ucert = w.lo * pow2_neg_bounds(a_lo, bits).lo;
        if (lcert < ucert) {
          table.emplace(sigma, simplest_dyadic_between(lcert, ucert));
          break;
        }
      }
      p = p * Rational(1, 2);
    }
    if (d < depth) {
      assign(sigma.extended(0));
      assign(sigma.extended(1));
    }
  };
  assign(BitString());
  return WeightFunction::rational_table(std::move(table), depth);
}

}  // namespace parw
