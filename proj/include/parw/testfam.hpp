#pragma once

#include <map>
#include <optional>
#include <vector>

#include "parw/codes.hpp"
#include "parw/cylinder.hpp"
#include "parw/estimator.hpp"
#include "parw/weights.hpp"

namespace parw {

// Indexed family of cylinder sets with weight-bound obligations
// (dwt(A_i) <= 2^-i, or pwt in the strong reading).
class TestFamily {
 public:
  TestFamily() = default;
  explicit TestFamily(std::map<long, CylinderSet> sets);
  const std::map<long, CylinderSet>& sets() const { return sets_; }
  int depth() const { return depth_; }
  bool empty() const { return sets_.empty(); }

 private:
  std::map<long, CylinderSet> sets_;
  int depth_ = 0;
};

struct TestGenResult {
  CylinderSet set;       // {tau : |tau| <= L, K(tau) < f(tau) - i}
  bool admissible;       // Kraft audit at depth L passed
  Rational audit_sum;
  Rational dwt_value;
  bool bound_ok;         // dwt <= 2^-i; asserted only when admissible
};

// Test level S_i of the estimator-driven universal test.
TestGenResult universal_test_generate(const ComplexityEstimator& est,
                                      const WeightFunction& w, long i, int L);

struct DeficiencyResult {
  std::vector<long> d;  // d(n) = f(X|n) - K(X|n) for n = 1..N
  // Largest i such that some prefix lies in the level-i test set, i.e.
  // max d(n) - 1; absent when no prefix enters any level.
  std::optional<long> max_test_level;
};

DeficiencyResult deficiency_profile(const BitString& bits,
                                    const WeightFunction& w,
                                    const ComplexityEstimator& est);

struct SemimeasureResult {
  std::map<long, Rational> per_index;  // m_i(sigma)
  // Finite mixture over available even indices 2i, i >= 1, of 2^i m_2i.
  Rational mixture;
  bool superadditive_at_sigma;  // m_i(sigma) >= m_i(sigma0) + m_i(sigma1)
  // Present when every pwt(A_i) <= 2^-i: the root mixture stays <= 1.
  std::optional<bool> mixture_root_bounded;
};

// m_i(sigma) = pwt of the members of A_i extending sigma.
SemimeasureResult semimeasure_from_family(const TestFamily& fam,
                                          const WeightFunction& w,
                                          const BitString& sigma);

struct TestAuditLine {
  long index = 0;
  Rational value;  // dwt(A_i), or pwt(A_i) in strong mode
  Rational bound;  // 2^-i
  bool pass = false;
};

struct TestAuditReport {
  bool strong = false;
  std::vector<TestAuditLine> lines;
  bool all_pass = false;
  Rational bc_partial_sum;  // sum over i of pwt(A_i)
};

TestAuditReport test_family_audit(const TestFamily& fam,
                                  const WeightFunction& w, bool strong);

// Code requests (tau, f(tau) - i + c) over the even-indexed sets A_2i, with
// the smallest offset c >= 0 making the Kraft sum <= 1 found by exact
// summation.
struct FamilyRequests {
  std::vector<CodeRequest> requests;
  long offset = 0;
  Rational kraft_sum;  // after applying the offset
};

FamilyRequests requests_from_family(const TestFamily& fam,
                                    const WeightFunction& w);

}  // namespace parw
