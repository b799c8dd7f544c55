#include "parw/goodcover.hpp"

namespace parw {

CoverState extend_cover(const CoverState& state, const BitString& sigma,
                        const WeightFunction& w) {
  if (!w.convex())
    throw PreconditionError("extend_cover: weight function is not convex");
  if (sigma.length() > w.depth())
    throw PreconditionError("extend_cover: string beyond weight domain");
  CoverState next = state;
  next.processed.push_back(sigma);
  if (cylinder_covered(sigma, state.accepted)) return next;

  std::optional<Rational> best;
  BitString best_tau;
  for (int n = 0; n <= sigma.length(); ++n) {
    BitString tau = sigma.prefix(n);
    Rational cost = dwt(state.accepted.with(tau).minimal_elements(), w);
    if (!best || cost < *best) {  // strict: shortest minimizer wins ties
      best = cost;
      best_tau = tau;
    }
  }
  next.accepted = state.accepted.with(best_tau);
  return next;
}

CylinderSet build_cover(const std::vector<BitString>& stream,
                        const WeightFunction& w) {
  CoverState state;
  for (const auto& sigma : stream) state = extend_cover(state, sigma, w);
  return state.accepted;
}

GoodCoverReport verify_good_cover(const CylinderSet& a, const CylinderSet& b,
                                  const WeightFunction& w,
                                  bool use_bruteforce, int brute_b) {
  GoodCoverReport rep;
  rep.covers_ok = covers(a, b);
  rep.vwt_a = use_bruteforce ? vwt_bruteforce(a, w, brute_b).value
                             : vwt_convex(a, w).value;
  rep.pwt_b = pwt(b, w).value;
  rep.weight_ok = rep.pwt_b <= rep.vwt_a;
  if (!rep.pass()) return rep;
  rep.vwt_b = use_bruteforce ? vwt_bruteforce(b, w, brute_b).value
                             : vwt_convex(b, w).value;
  rep.dwt_b_hat = dwt(b.minimal_elements(), w);
  rep.chain_equal = rep.vwt_a == rep.vwt_b && rep.vwt_b == rep.dwt_b_hat &&
                    rep.dwt_b_hat == rep.pwt_b;
  return rep;
}

}  // namespace parw
