#include "parw/testfam.hpp"

#include <algorithm>
#include <functional>

namespace parw {

TestFamily::TestFamily(std::map<long, CylinderSet> sets)
    : sets_(std::move(sets)) {
  for (const auto& [i, a] : sets_) {
    if (i < 0)
      throw PreconditionError("test family index must be a natural number");
    depth_ = std::max(depth_, a.depth());
  }
}

TestGenResult universal_test_generate(const ComplexityEstimator& est,
                                      const WeightFunction& w, long i,
                                      int L) {
  if (L > est.domain_length())
    throw PreconditionError("universal_test_generate: L beyond estimator");
  if (L > w.depth())
    throw PreconditionError("universal_test_generate: L beyond weight domain");
  if (!w.has_exponent_view())
    throw PreconditionError(
        "universal_test_generate: integer-exponent weight required");
  std::vector<BitString> members;
  std::function<void(const BitString&)> walk = [&](const BitString& tau) {
    if (est.evaluate(tau) < *w.exponent(tau) - i) members.push_back(tau);
    if (tau.length() >= L) return;
    walk(tau.extended(0));
    walk(tau.extended(1));
  };
  walk(BitString());

  TestGenResult res{CylinderSet(std::move(members)), false, Rational(),
                    Rational(), false};
  KraftAuditResult audit = kraft_audit(est, L);
  res.admissible = audit.admissible;
  res.audit_sum = audit.sum;
  res.dwt_value = dwt(res.set, w);
  res.bound_ok = res.dwt_value <= Rational::pow2(-i);
  if (res.admissible && !res.bound_ok)
    throw std::logic_error(
        "universal_test_generate: admissible estimator produced a level "
        "violating its weight bound");
  return res;
}

DeficiencyResult deficiency_profile(const BitString& bits,
                                    const WeightFunction& w,
                                    const ComplexityEstimator& est) {
  if (bits.length() > est.domain_length() || bits.length() > w.depth())
    throw PreconditionError("deficiency_profile: prefix beyond domain");
  if (!w.has_exponent_view())
    throw PreconditionError(
        "deficiency_profile: integer-exponent weight required");
  DeficiencyResult res;
  long best = 0;
  for (int n = 1; n <= bits.length(); ++n) {
    BitString p = bits.prefix(n);
    long dn = *w.exponent(p) - est.evaluate(p);
    res.d.push_back(dn);
    best = std::max(best, dn);
  }
  // tau lies in the level-i set iff d > i, so the deepest level reached by
  // some prefix is max d - 1.
  if (best >= 1) res.max_test_level = best - 1;
  return res;
}

SemimeasureResult semimeasure_from_family(const TestFamily& fam,
                                          const WeightFunction& w,
                                          const BitString& sigma) {
  SemimeasureResult res;
  res.superadditive_at_sigma = true;
  auto m = [&](long i, const BitString& s) {
    return pwt(fam.sets().at(i).restricted_to_extensions(s), w).value;
  };
  for (const auto& [i, a] : fam.sets()) {
    (void)a;
    Rational here = m(i, sigma);
    res.per_index.emplace(i, here);
    if (here < m(i, sigma.extended(0)) + m(i, sigma.extended(1)))
      res.superadditive_at_sigma = false;
    if (i >= 2 && i % 2 == 0) res.mixture += Rational::pow2(i / 2) * here;
  }
  TestAuditReport audit = test_family_audit(fam, w, /*strong=*/true);
  if (audit.all_pass) {
    Rational root_mix;
    for (const auto& [i, a] : fam.sets())
      if (i >= 2 && i % 2 == 0)
        root_mix += Rational::pow2(i / 2) * pwt(a, w).value;
    res.mixture_root_bounded = root_mix <= Rational(1);
  }
  return res;
}

TestAuditReport test_family_audit(const TestFamily& fam,
                                  const WeightFunction& w, bool strong) {
  TestAuditReport rep;
  rep.strong = strong;
  rep.all_pass = true;
  for (const auto& [i, a] : fam.sets()) {
    TestAuditLine line;
    line.index = i;
    Rational p = pwt(a, w).value;
    line.value = strong ? p : dwt(a, w);
    line.bound = Rational::pow2(-i);
    line.pass = line.value <= line.bound;
    rep.all_pass = rep.all_pass && line.pass;
    rep.bc_partial_sum += p;
    rep.lines.push_back(std::move(line));
  }
  return rep;
}

FamilyRequests requests_from_family(const TestFamily& fam,
                                    const WeightFunction& w) {
  if (!w.has_exponent_view())
    throw PreconditionError(
        "requests_from_family: integer-exponent weight required");
  FamilyRequests out;
  Rational raw_sum;
  long min_len = 0;
  std::vector<std::pair<std::string, long>> raw;
  for (const auto& [j, a] : fam.sets()) {
    if (j % 2 != 0) continue;
    long i = j / 2;
    for (const auto& tau : a.members()) {
      long len = *w.exponent(tau) - i;
      raw.emplace_back(tau.str(), len);
      raw_sum += Rational::pow2(-len);
      min_len = std::min(min_len, len);
    }
  }
  long c = -min_len;  // first make every length nonnegative
  if (!raw_sum.is_zero()) {
    while (raw_sum > Rational::pow2(c)) ++c;
  }
  out.offset = c;
  for (auto& [label, len] : raw) out.requests.push_back({label, len + c});
  out.kraft_sum = raw_sum * Rational::pow2(-c);
  return out;
}

}  // namespace parw
