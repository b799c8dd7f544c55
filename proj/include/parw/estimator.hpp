#pragma once

#include <map>

#include "parw/bitstring.hpp"
#include "parw/errors.hpp"
#include "parw/rational.hpp"

namespace parw {

// Elias-gamma code length 2 floor(log2 n) + 1 for n >= 1; the gamma code is
// exactly Kraft-tight over the positive integers.
long elias_gamma_length(long n);

// Self-delimiting sub-code lengths for the built-in estimator family.
//   literal:  |tau| + 2 ceil(log2(|tau|+1)) + 1
//   run-length: 4 + 1 + gamma(#runs) + sum of gamma(run length)
//   periodic:   4 + gamma(|p|) + |p| + gamma(|tau|), p = shortest period
// The 4-bit headers keep the family's total mass provably below 1
// (3/4 + 1/16 + 1/16); run-length and periodic need |tau| >= 1.
long literal_code_length(const BitString& tau);
long run_length_code_length(const BitString& tau);
long periodic_code_length(const BitString& tau);

// Computable stand-in for a prefix-machine complexity: an explicit table or
// the built-in code family (pointwise min of the three sub-codes). The
// property the theorems consume is admissibility — the Kraft audit — not
// accuracy.
class ComplexityEstimator {
 public:
  enum class Kind { Table, CodeFamily };

  static ComplexityEstimator table(std::map<BitString, long> values,
                                   int domain_length);
  static ComplexityEstimator code_family(int domain_length = 64);

  Kind kind() const { return kind_; }
  int domain_length() const { return domain_length_; }
  long evaluate(const BitString& tau) const;
  const std::map<BitString, long>& values() const { return values_; }

 private:
  ComplexityEstimator() = default;
  Kind kind_ = Kind::CodeFamily;
  int domain_length_ = 0;
  std::map<BitString, long> values_;
};

struct KraftAuditResult {
  int depth = 0;
  Rational sum;            // sum over |tau| <= depth of 2^-K(tau)
  bool admissible = false; // sum <= 1
};

KraftAuditResult kraft_audit(const ComplexityEstimator& est, int depth);

}  // namespace parw
