#include "parw/levin.hpp"

#include <algorithm>
#include <functional>

#include "parw/errors.hpp"

namespace parw {

MonotoneFunctionalTable::MonotoneFunctionalTable(
    std::map<BitString, BitString> entries, int depth_y, int depth_x)
    : entries_(std::move(entries)), depth_y_(depth_y), depth_x_(depth_x) {
  for (const auto& [rho, out] : entries_) {
    (void)out;
    if (rho.length() > depth_y_)
      throw PreconditionError("functional input beyond depth: " + rho.str());
  }
  // Monotonicity: comparable defined inputs must have nested outputs. Sorted
  // order places every extension after its prefixes, so it suffices to check
  // each entry against the defined prefixes of its input.
  for (const auto& [rho, out] : entries_) {
    for (int n = 0; n < rho.length(); ++n) {
      auto it = entries_.find(rho.prefix(n));
      if (it != entries_.end() && !it->second.is_prefix_of(out))
        throw PreconditionError("functional not monotone between " +
                                it->first.str() + " and " + rho.str());
    }
  }
}

void FiniteLevinSystem::add_entry(const BitString& sigma,
                                  const BitString& cylinder,
                                  std::uint64_t stamp) {
  if (sigma.length() > depth_x_)
    throw PreconditionError("levin system index beyond depth: " + sigma.str());
  entries_[sigma].push_back({cylinder, stamp});
}

const std::vector<FiniteLevinSystem::Entry>& FiniteLevinSystem::entries(
    const BitString& sigma) const {
  static const std::vector<Entry> kEmpty;
  auto it = entries_.find(sigma);
  return it == entries_.end() ? kEmpty : it->second;
}

CylinderSet FiniteLevinSystem::set(const BitString& sigma) const {
  std::vector<BitString> members;
  for (const auto& e : entries(sigma)) members.push_back(e.cylinder);
  return CylinderSet(std::move(members));
}

Rational FiniteLevinSystem::measure(const BitString& sigma) const {
  return set(sigma).measure();
}

FiniteLevinSystem levin_from_functional(const MonotoneFunctionalTable& phi) {
  FiniteLevinSystem sys(phi.depth_x(), phi.depth_y());
  // For each index sigma, the minimal preimages; each minimal cylinder is
  // stamped once and listed under every index it certifies.
  std::uint64_t stamp = 0;
  std::vector<BitString> indices;
  std::function<void(const BitString&)> gather = [&](const BitString& s) {
    indices.push_back(s);
    if (s.length() >= phi.depth_x()) return;
    gather(s.extended(0));
    gather(s.extended(1));
  };
  gather(BitString());
  std::sort(indices.begin(), indices.end(),
            [](const BitString& a, const BitString& b) {
              return a.length() != b.length() ? a.length() < b.length()
                                              : a < b;
            });

  for (const auto& sigma : indices) {
    std::vector<BitString> pre;
    for (const auto& [rho, out] : phi.entries())
      if (sigma.is_prefix_of(out)) pre.push_back(rho);
    CylinderSet min = CylinderSet(std::move(pre)).minimal_elements();
    for (const auto& rho : min.members()) sys.add_entry(sigma, rho, stamp++);
  }
  return sys;
}

LevinValidation levin_validate(const FiniteLevinSystem& v) {
  LevinValidation res;
  std::vector<BitString> indices;
  std::function<void(const BitString&)> gather = [&](const BitString& s) {
    indices.push_back(s);
    if (s.length() >= v.depth_x()) return;
    gather(s.extended(0));
    gather(s.extended(1));
  };
  gather(BitString());

  auto fail = [&](const std::string& what) {
    res.pass = false;
    res.violations.push_back(what);
  };
  for (const auto& sigma : indices) {
    CylinderSet here = v.set(sigma);
    if (sigma.length() < v.depth_x()) {
      CylinderSet c0 = v.set(sigma.extended(0));
      CylinderSet c1 = v.set(sigma.extended(1));
      if (!covers(c0.union_with(c1), here))
        fail("children of " + sigma.str() + " not contained in parent");
      if (!region_disjoint(c0, c1))
        fail("children of " + sigma.str() + " overlap");
    }
    // Derived consequences, re-checked rather than assumed.
    for (int n = 0; n < sigma.length(); ++n)
      if (!covers(here, v.set(sigma.prefix(n))))
        fail("nesting fails between " + sigma.str() + " and " +
             sigma.prefix(n).str());
    for (const auto& tau : indices) {
      if (tau >= sigma || tau.comparable_with(sigma)) continue;
      if (!region_disjoint(here, v.set(tau)))
        fail("incomparable indices " + sigma.str() + " and " + tau.str() +
             " overlap");
    }
  }
  return res;
}

CapAssignment::CapAssignment(std::map<BitString, Rational> caps, int depth_x)
    : caps_(std::move(caps)), depth_x_(depth_x) {
  std::function<void(const BitString&)> check = [&](const BitString& s) {
    auto it = caps_.find(s);
    if (it == caps_.end())
      throw PreconditionError("cap assignment missing entry for " + s.str());
    if (it->second.sign() <= 0)
      throw PreconditionError("cap must be positive at " + s.str());
    if (s.length() >= depth_x_) return;
    check(s.extended(0));
    check(s.extended(1));
  };
  check(BitString());
}

const Rational& CapAssignment::cap(const BitString& sigma) const {
  auto it = caps_.find(sigma);
  if (it == caps_.end())
    throw PreconditionError("cap assignment undefined at " + sigma.str());
  return it->second;
}

FiniteLevinSystem levin_truncate(const FiniteLevinSystem& v,
                                 const CapAssignment& r) {
  LevinValidation valid = levin_validate(v);
  if (!valid.pass)
    throw PreconditionError("levin_truncate: input system fails validation: " +
                            valid.violations.front());

  struct Event {
    std::uint64_t stamp;
    BitString index;
    BitString cylinder;
  };
  std::vector<Event> events;
  for (const auto& [sigma, list] : v.all_entries())
    for (const auto& e : list) events.push_back({e.stamp, sigma, e.cylinder});
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.stamp != b.stamp) return a.stamp < b.stamp;
    if (a.index.length() != b.index.length())
      return a.index.length() < b.index.length();
    return a.index < b.index;
  });

  FiniteLevinSystem out(v.depth_x(), v.depth_y());
  std::map<BitString, std::vector<BitString>> admitted;
  auto measure_with = [&](const BitString& idx, const BitString& cyl) {
    std::vector<BitString> m = admitted[idx];
    m.push_back(cyl);
    return CylinderSet(std::move(m)).measure();
  };

  for (const auto& ev : events) {
    // Longest admissible prefix tau' of the event's index: every cap along
    // the chain up to tau' must survive the admission.
    int best = -1;
    for (int n = 0; n <= ev.index.length(); ++n) {
      BitString anc = ev.index.prefix(n);
      if (measure_with(anc, ev.cylinder) > r.cap(anc)) break;
      best = n;
    }
    for (int n = 0; n <= best; ++n) {
      BitString anc = ev.index.prefix(n);
      auto& list = admitted[anc];
      if (std::find(list.begin(), list.end(), ev.cylinder) == list.end()) {
        list.push_back(ev.cylinder);
        out.add_entry(anc, ev.cylinder, ev.stamp);
      }
    }
  }
  return out;
}

LevinMeasureTest levin_measure_test(const FiniteLevinSystem& v,
                                    const WeightFunction& w, long i) {
  if (v.depth_x() > w.depth())
    throw PreconditionError("levin_measure_test: weight domain too shallow");
  LevinMeasureTest res;
  res.level = i;
  std::vector<BitString> members;
  std::function<void(const BitString&)> walk = [&](const BitString& sigma) {
    if (v.measure(sigma) > Rational::pow2(i) * w.weight(sigma))
      members.push_back(sigma);
    if (sigma.length() >= v.depth_x()) return;
    walk(sigma.extended(0));
    walk(sigma.extended(1));
  };
  walk(BitString());
  res.set = CylinderSet(std::move(members));
  res.pwt_value = pwt(res.set, w).value;
  res.bound = Rational::pow2(-i);
  res.bound_ok = res.pwt_value <= res.bound;
  return res;
}

LevinPushforwardBound levin_pushforward_bound(const FiniteLevinSystem& v,
                                              const CylinderSet& a,
                                              const WeightFunction& w,
                                              long c) {
  if (a.depth() > v.depth_x())
    throw PreconditionError("levin_pushforward_bound: set beyond system depth");
  LevinPushforwardBound res;
  std::function<void(const BitString&)> precheck = [&](const BitString& s) {
    if (res.precondition_failure) return;
    if (v.measure(s) > Rational::pow2(c) * w.weight(s)) {
      res.precondition_failure = s;
      return;
    }
    if (s.length() >= v.depth_x()) return;
    precheck(s.extended(0));
    precheck(s.extended(1));
  };
  precheck(BitString());
  if (res.precondition_failure) return res;

  CylinderSet min = a.minimal_elements();
  CylinderSet whole;
  for (const auto& sigma : min.members()) {
    CylinderSet part = v.set(sigma);
    whole = whole.union_with(part);
    res.sum_parts += part.measure();
  }
  res.mu_union = whole.measure();
  res.disjoint_sum_ok = res.mu_union == res.sum_parts;
  res.pwt_value = pwt(a, w).value;
  res.bound = Rational::pow2(c) * res.pwt_value;
  res.bound_ok = res.mu_union <= res.bound;
  return res;
}

}  // namespace parw
