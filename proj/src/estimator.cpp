#include "parw/estimator.hpp"

#include <algorithm>
#include <functional>

namespace parw {

long elias_gamma_length(long n) {
  if (n < 1) throw PreconditionError("elias_gamma_length: needs n >= 1");
  long bits = 0;
  for (long v = n; v > 1; v >>= 1) ++bits;
  return 2 * bits + 1;
}

long literal_code_length(const BitString& tau) {
  long n = tau.length();
  long lg = 0;
  while ((1L << lg) < n + 1) ++lg;  // ceil(log2(n+1))
  return n + 2 * lg + 1;
}

long run_length_code_length(const BitString& tau) {
  if (tau.length() == 0)
    throw PreconditionError("run_length_code_length: needs |tau| >= 1");
  long total = 4 + 1;  // header + first bit
  std::vector<long> runs;
  long cur = 1;
  for (int i = 1; i < tau.length(); ++i) {
    if (tau.bit(i) == tau.bit(i - 1)) {
      ++cur;
    } else {
      runs.push_back(cur);
      cur = 1;
    }
  }
  runs.push_back(cur);
  total += elias_gamma_length(static_cast<long>(runs.size()));
  for (long r : runs) total += elias_gamma_length(r);
  return total;
}

namespace {

// Smallest l >= 1 with tau(i) = tau(i mod l) for all i.
long shortest_period(const BitString& tau) {
  for (long l = 1; l < tau.length(); ++l) {
    bool ok = true;
    for (int i = static_cast<int>(l); i < tau.length() && ok; ++i)
      if (tau.bit(i) != tau.bit(i - static_cast<int>(l))) ok = false;
    if (ok) return l;
  }
  return tau.length();
}

}  // namespace

long periodic_code_length(const BitString& tau) {
  if (tau.length() == 0)
    throw PreconditionError("periodic_code_length: needs |tau| >= 1");
  long p = shortest_period(tau);
  return 4 + elias_gamma_length(p) + p + elias_gamma_length(tau.length());
}

ComplexityEstimator ComplexityEstimator::table(std::map<BitString, long> v,
                                               int domain_length) {
  ComplexityEstimator est;
  est.kind_ = Kind::Table;
  est.domain_length_ = domain_length;
  est.values_ = std::move(v);
  std::function<void(const BitString&)> check = [&](const BitString& s) {
    if (!est.values_.count(s))
      throw PreconditionError("estimator table missing entry for " + s.str());
    if (s.length() >= domain_length) return;
    check(s.extended(0));
    check(s.extended(1));
  };
  check(BitString());
  for (const auto& [tau, k] : est.values_)
    if (tau.length() > domain_length || k < 0)
      throw PreconditionError("estimator table entry invalid at " + tau.str());
  return est;
}

ComplexityEstimator ComplexityEstimator::code_family(int domain_length) {
  ComplexityEstimator est;
  est.kind_ = Kind::CodeFamily;
  est.domain_length_ = domain_length;
  return est;
}

long ComplexityEstimator::evaluate(const BitString& tau) const {
  if (tau.length() > domain_length_)
    throw PreconditionError("estimator: domain length exceeded by " +
                            tau.str());
  if (kind_ == Kind::Table) return values_.at(tau);
  long best = literal_code_length(tau);
  if (tau.length() >= 1) {
    best = std::min(best, run_length_code_length(tau));
    best = std::min(best, periodic_code_length(tau));
  }
  return best;
}

KraftAuditResult kraft_audit(const ComplexityEstimator& est, int depth) {
  if (depth > est.domain_length())
    throw PreconditionError("kraft_audit: depth beyond estimator domain");
  KraftAuditResult res;
  res.depth = depth;
  std::function<void(const BitString&)> walk = [&](const BitString& tau) {
    res.sum += Rational::pow2(-est.evaluate(tau));
    if (tau.length() >= depth) return;
    walk(tau.extended(0));
    walk(tau.extended(1));
  };
  walk(BitString());
  res.admissible = res.sum <= Rational(1);
  return res;
}

}  // namespace parw
