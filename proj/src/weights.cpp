#include "parw/weights.hpp"

#include <functional>
#include <limits>
#include <vector>

namespace parw {

std::string to_string(WeightMethod m) {
  switch (m) {
    case WeightMethod::Sum: return "sum";
    case WeightMethod::AntichainDp: return "antichain-dp";
    case WeightMethod::ConvexCoverDp: return "convex-cover-dp";
    case WeightMethod::DepthBounded: return "depth-bounded";
    case WeightMethod::BruteForce: return "brute-force";
  }
  return "?";
}

namespace {

struct TrieNode {
  int child[2] = {-1, -1};
  bool member = false;
  BitString path;
};

// Trie over all prefixes of the members of a set.
struct Trie {
  std::vector<TrieNode> nodes;

  explicit Trie(const CylinderSet& a) {
    nodes.emplace_back();
    for (const auto& m : a.members()) {
      int cur = 0;
      for (int i = 0; i < m.length(); ++i) {
        int b = m.bit(i);
        if (nodes[cur].child[b] < 0) {
          TrieNode n;
          n.path = nodes[cur].path.extended(b);
          nodes[cur].child[b] = static_cast<int>(nodes.size());
          nodes.push_back(std::move(n));
        }
        cur = nodes[cur].child[b];
      }
      nodes[cur].member = true;
    }
  }
};

void check_domain(const char* op, int needed, const WeightFunction& w) {
  if (needed > w.depth())
    throw PreconditionError(std::string(op) + ": set of depth " +
                            std::to_string(needed) +
                            " exceeds weight domain depth " +
                            std::to_string(w.depth()));
}

void require_convex(const char* op, const WeightFunction& w) {
  if (!w.convex())
    throw PreconditionError(std::string(op) +
                            ": weight function is not convex (violated at " +
                            w.convexity_violation()->str() + ")");
}

}  // namespace

Rational dwt(const CylinderSet& a, const WeightFunction& w) {
  check_domain("dwt", a.depth(), w);
  Rational total;
  for (const auto& m : a.members()) total += w.weight(m);
  return total;
}

WeightReport pwt(const CylinderSet& a, const WeightFunction& w) {
  check_domain("pwt", a.depth(), w);
  Trie t(a);
  // choice per node: 0 = nothing below, 1 = take the node, 2 = split.
  std::vector<int> choice(t.nodes.size(), 0);
  std::function<Rational(int)> best = [&](int v) -> Rational {
    Rational split;
    bool any_child = false;
    for (int b : {0, 1}) {
      int c = t.nodes[v].child[b];
      if (c >= 0) {
        split += best(c);
        any_child = true;
      }
    }
    if (t.nodes[v].member) {
      Rational self = w.weight(t.nodes[v].path);
      if (self >= split) {
        choice[v] = 1;
        return self;
      }
    }
    choice[v] = any_child ? 2 : 0;
    return split;
  };
  Rational value = best(0);

  std::vector<BitString> picked;
  std::function<void(int)> collect = [&](int v) {
    if (choice[v] == 1) {
      picked.push_back(t.nodes[v].path);
      return;
    }
    if (choice[v] != 2) return;
    for (int b : {0, 1})
      if (t.nodes[v].child[b] >= 0) collect(t.nodes[v].child[b]);
  };
  collect(0);
  return {value, CylinderSet(std::move(picked)), WeightMethod::AntichainDp,
          std::nullopt};
}

WeightReport vwt_convex(const CylinderSet& a, const WeightFunction& w) {
  require_convex("vwt_convex", w);
  CylinderSet ah = a.minimal_elements();
  check_domain("vwt_convex", ah.depth(), w);
  if (ah.empty())
    return {Rational(), CylinderSet(), WeightMethod::ConvexCoverDp,
            std::nullopt};
  Trie t(ah);
  std::vector<int> choice(t.nodes.size(), 1);  // 1 = take, 2 = split
  std::function<Rational(int)> cost = [&](int v) -> Rational {
    Rational take = w.weight(t.nodes[v].path);
    if (t.nodes[v].member) return take;  // fully required; splitting cannot
                                         // improve a convex weight
    Rational split;
    for (int b : {0, 1})
      if (t.nodes[v].child[b] >= 0) split += cost(t.nodes[v].child[b]);
    if (take <= split) return take;
    choice[v] = 2;
    return split;
  };
  Rational value = cost(0);
  // Recompute choices top-down for witness extraction (cost() already filled
  // them; member nodes stay "take").
  std::vector<BitString> picked;
  std::function<void(int)> collect = [&](int v) {
    if (t.nodes[v].member || choice[v] == 1) {
      picked.push_back(t.nodes[v].path);
      return;
    }
    for (int b : {0, 1})
      if (t.nodes[v].child[b] >= 0) collect(t.nodes[v].child[b]);
  };
  collect(0);
  return {value, CylinderSet(std::move(picked)), WeightMethod::ConvexCoverDp,
          std::nullopt};
}

namespace {

// Shared recursion for the depth-bounded minimum. A node is "full" when its
// whole cylinder must be covered (it extends a required string); otherwise
// it is a proper prefix of required strings and only the trie children below
// it carry obligations.
struct BoundedMin {
  const Trie& t;
  const WeightFunction& w;
  int cap;
  std::vector<BitString> picked;

  Rational solve(const BitString& path, int node, bool full) {
    Rational take = w.weight(path);
    bool is_full = full || (node >= 0 && t.nodes[node].member);
    if (path.length() >= cap) {
      picked.push_back(path);
      return take;
    }
    Rational split;
    std::vector<BitString> split_picked;
    {
      std::vector<BitString> saved = std::move(picked);
      picked.clear();
      if (is_full) {
        split = solve(path.extended(0), -1, true) +
                solve(path.extended(1), -1, true);
      } else {
        for (int b : {0, 1}) {
          int c = t.nodes[node].child[b];
          if (c >= 0) split += solve(path.extended(b), c, false);
        }
      }
      split_picked = std::move(picked);
      picked = std::move(saved);
    }
    if (take <= split) {
      picked.push_back(path);
      return take;
    }
    picked.insert(picked.end(), split_picked.begin(), split_picked.end());
    return split;
  }
};

}  // namespace

WeightReport vwt_depth_bounded(const CylinderSet& a, const WeightFunction& w,
                               int k) {
  if (k < 0) throw PreconditionError("vwt_depth_bounded: negative k");
  CylinderSet ah = a.minimal_elements();
  int cap = a.depth() + k;
  check_domain("vwt_depth_bounded", cap, w);
  if (ah.empty())
    return {Rational(), CylinderSet(), WeightMethod::DepthBounded, k};
  Trie t(ah);
  BoundedMin bm{t, w, cap, {}};
  Rational value = bm.solve(BitString(), 0, false);
  return {value, CylinderSet(std::move(bm.picked)), WeightMethod::DepthBounded,
          k};
}

namespace {

constexpr std::uint64_t kEstimateSaturation =
    std::numeric_limits<std::uint64_t>::max() / 4;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kEstimateSaturation / a) return kEstimateSaturation;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  if (a > kEstimateSaturation - b) return kEstimateSaturation;
  return a + b;
}

// Backtracking enumeration of every prefix-free cover drawn from strings of
// length <= cap, pruned only by the accumulated cost against the best cover
// found so far (no convexity reasoning).
struct BruteSearch {
  const Trie& t;
  const WeightFunction& w;
  int cap;

  struct Item {
    BitString path;
    int node;  // -1 once below a required string
  };

  Rational best;
  bool have_best = false;
  std::vector<BitString> current, best_cover;

  std::uint64_t estimate(const BitString& path, int node, bool full) {
    if (path.length() >= cap) return 1;
    bool is_full = full || (node >= 0 && t.nodes[node].member);
    std::uint64_t split = 1;
    if (is_full) {
      split = sat_mul(estimate(path.extended(0), -1, true),
                      estimate(path.extended(1), -1, true));
    } else {
      for (int b : {0, 1}) {
        int c = t.nodes[node].child[b];
        if (c >= 0) split = sat_mul(split, estimate(path.extended(b), c, false));
      }
    }
    return sat_add(1, split);
  }

  void search(std::vector<Item>& pending, const Rational& acc) {
    if (have_best && acc >= best) return;
    if (pending.empty()) {
      best = acc;
      best_cover = current;
      have_best = true;
      return;
    }
    Item item = pending.back();
    pending.pop_back();

    current.push_back(item.path);
    search(pending, acc + w.weight(item.path));
    current.pop_back();

    if (item.path.length() < cap) {
      bool is_full = item.node < 0 || t.nodes[item.node].member;
      size_t mark = pending.size();
      if (is_full) {
        pending.push_back({item.path.extended(0), -1});
        pending.push_back({item.path.extended(1), -1});
      } else {
        for (int b : {0, 1}) {
          int c = t.nodes[item.node].child[b];
          if (c >= 0) pending.push_back({item.path.extended(b), c});
        }
      }
      search(pending, acc);
      pending.resize(mark);
    }
    pending.push_back(item);
  }
};

}  // namespace

WeightReport vwt_bruteforce(const CylinderSet& a, const WeightFunction& w,
                            int b, std::uint64_t search_guard) {
  if (b < 0) throw PreconditionError("vwt_bruteforce: negative b");
  CylinderSet ah = a.minimal_elements();
  int cap = a.depth() + b;
  check_domain("vwt_bruteforce", cap, w);
  if (ah.empty())
    return {Rational(), CylinderSet(), WeightMethod::BruteForce, b};
  Trie t(ah);
  BruteSearch bs{t, w, cap};
  std::uint64_t est = bs.estimate(BitString(), 0, false);
  if (est > search_guard)
    throw InstanceTooLarge("vwt_bruteforce: estimated " + std::to_string(est) +
                           " covers exceeds guard " +
                           std::to_string(search_guard));
  std::vector<BruteSearch::Item> pending;
  pending.push_back({BitString(), 0});
  bs.search(pending, Rational());
  return {bs.best, CylinderSet(std::move(bs.best_cover)),
          WeightMethod::BruteForce, b};
}

}  // namespace parw
