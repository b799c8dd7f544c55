#include "parw/dnrsim.hpp"

#include <algorithm>

namespace parw {

FinitePiClass::FinitePiClass(int depth, std::vector<BitString> leaves)
    : depth_(depth), leaves_(std::move(leaves)) {
  std::sort(leaves_.begin(), leaves_.end());
  leaves_.erase(std::unique(leaves_.begin(), leaves_.end()), leaves_.end());
  if (leaves_.empty())
    throw PreconditionError("pi class must be nonempty");
  for (const auto& l : leaves_)
    if (l.length() != depth_)
      throw PreconditionError("leaf " + l.str() + " does not have depth " +
                              std::to_string(depth_));
}

OracleTable::OracleTable(int num_indices,
                         std::map<std::pair<int, BitString>, long> vals)
    : num_indices_(num_indices), values_(std::move(vals)) {
  if (num_indices < 0)
    throw PreconditionError("oracle table needs a nonnegative index count");
  for (const auto& [key, v] : values_)
    if (key.first < 0 || v < 0)
      throw PreconditionError("oracle table entries must be nonnegative");
}

std::optional<long> OracleTable::value(int n, const BitString& leaf) const {
  auto it = values_.find({n, leaf});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::vector<BitString> restrict_class(const FinitePiClass& q,
                                      const OracleTable& t,
                                      const std::vector<long>& history) {
  if (history.size() > static_cast<size_t>(t.num_indices()))
    throw PreconditionError("restrict_class: history longer than table");
  std::vector<BitString> out;
  for (const auto& leaf : q.leaves()) {
    bool alive = true;
    for (size_t n = 0; n < history.size() && alive; ++n) {
      auto v = t.value(static_cast<int>(n), leaf);
      if (v && *v == history[n]) alive = false;
    }
    if (alive) out.push_back(leaf);
  }
  return out;
}

std::optional<long> derived_diagonal(const FinitePiClass& q,
                                     const OracleTable& t, int n,
                                     const std::vector<long>& history) {
  std::vector<BitString> survivors = restrict_class(q, t, history);
  if (survivors.empty())
    throw PreconditionError("derived_diagonal: restricted class is empty");
  std::optional<long> m;
  for (const auto& leaf : survivors) {
    auto v = t.value(n, leaf);
    if (!v) return std::nullopt;  // a divergent leaf keeps the diagonal open
    if (!m) m = *v;
    else if (*m != *v) return std::nullopt;
  }
  return m;
}

namespace {

long avoid(const std::optional<long>& diagonal) {
  return diagonal ? *diagonal + 1 : 0;
}

}  // namespace

PropagationRun run_propagation(const FinitePiClass& q, const OracleTable& t) {
  PropagationRun run;
  run.chain.push_back(q.leaves());
  for (int n = 0; n < t.num_indices(); ++n) {
    run.g.push_back(avoid(derived_diagonal(q, t, n, run.g)));
    auto next = restrict_class(q, t, run.g);
    if (next.empty())
      throw std::logic_error(
          "run_propagation: chain element emptied — the avoidance invariant "
          "failed");
    run.chain.push_back(std::move(next));
  }
  run.witness = run.chain.back().front();  // sorted, so lexicographic least
  return run;
}

WitnessReport verify_witness(const PropagationRun& run,
                             const FinitePiClass& q, const OracleTable& t) {
  WitnessReport rep;
  rep.nesting_ok = true;
  for (size_t k = 0; k + 1 < run.chain.size(); ++k)
    for (const auto& leaf : run.chain[k + 1])
      if (std::find(run.chain[k].begin(), run.chain[k].end(), leaf) ==
          run.chain[k].end())
        rep.nesting_ok = false;
  rep.membership_ok = !run.chain.empty();
  for (const auto& element : run.chain)
    if (std::find(element.begin(), element.end(), run.witness) ==
        element.end())
      rep.membership_ok = false;
  rep.diagonal_ok = true;
  for (size_t n = 0; n < run.g.size(); ++n) {
    auto v = t.value(static_cast<int>(n), run.witness);
    if (v && *v == run.g[n]) rep.diagonal_ok = false;
  }
  (void)q;
  return rep;
}

namespace {

// Shared integer kernel: returns false when a chain element empties.
inline bool propagate_kernel(int leaves, int n_indices, unsigned mask0,
                             const std::uint8_t* digits, std::uint8_t undef,
                             long* g_out, unsigned* final_mask) {
  unsigned mask = mask0;
  for (int n = 0; n < n_indices; ++n) {
    const std::uint8_t* row = digits + n * leaves;
    int m = -1;
    bool all_defined = true;
    for (int l = 0; l < leaves; ++l) {
      if (!((mask >> l) & 1u)) continue;
      std::uint8_t v = row[l];
      if (v == undef) {
        all_defined = false;
        break;
      }
      if (m < 0) m = v;
      else if (m != v) {
        all_defined = false;
        break;
      }
    }
    long g = all_defined ? m + 1 : 0;
    g_out[n] = g;
    unsigned next = 0;
    for (int l = 0; l < leaves; ++l) {
      if (!((mask >> l) & 1u)) continue;
      std::uint8_t v = row[l];
      if (v == undef || static_cast<long>(v) != g) next |= 1u << l;
    }
    mask = next;
    if (!mask) return false;
  }
  *final_mask = mask;
  return true;
}

inline bool verify_kernel(int leaves, int n_indices, unsigned mask0,
                          const std::uint8_t* digits, std::uint8_t undef,
                          const long* g, int witness) {
  if (!((mask0 >> witness) & 1u)) return false;
  unsigned mask = mask0;
  for (int n = 0; n < n_indices; ++n) {
    const std::uint8_t* row = digits + n * leaves;
    std::uint8_t v = row[witness];
    if (v != undef && static_cast<long>(v) == g[n]) return false;
    unsigned next = 0;
    for (int l = 0; l < leaves; ++l) {
      if (!((mask >> l) & 1u)) continue;
      std::uint8_t vv = row[l];
      if (vv == undef || static_cast<long>(vv) != g[n]) next |= 1u << l;
    }
    if ((next & ~mask) != 0) return false;       // nesting
    if (!((next >> witness) & 1u)) return false;  // membership
    mask = next;
  }
  return true;
}

}  // namespace

PackedOutcome dnr_propagate_packed(int depth, int n_indices,
                                   unsigned leaf_mask,
                                   const std::vector<std::uint8_t>& digits,
                                   std::uint8_t undef_code) {
  int leaves = 1 << depth;
  if (digits.size() != static_cast<size_t>(n_indices) * leaves)
    throw PreconditionError("dnr_propagate_packed: digit count mismatch");
  if (leaf_mask == 0 || leaf_mask >= (1u << leaves))
    throw PreconditionError("dnr_propagate_packed: bad leaf mask");
  PackedOutcome out;
  out.g.resize(static_cast<size_t>(n_indices));
  unsigned final_mask = 0;
  if (!propagate_kernel(leaves, n_indices, leaf_mask, digits.data(),
                        undef_code, out.g.data(), &final_mask)) {
    out.empty_chain = true;
    return out;
  }
  int witness = 0;
  while (!((final_mask >> witness) & 1u)) ++witness;
  out.witness_leaf = witness;
  out.witness_ok = verify_kernel(leaves, n_indices, leaf_mask, digits.data(),
                                 undef_code, out.g.data(), witness);
  return out;
}

SweepResult dnr_exhaustive_sweep(int max_depth, int max_n, long vmax) {
  if (max_depth < 0 || max_depth > 4 || max_n < 0 || vmax < 0 || vmax > 250)
    throw PreconditionError("dnr_exhaustive_sweep: parameters out of range");
  SweepResult res;
  const std::uint8_t undef = static_cast<std::uint8_t>(vmax + 1);
  const int base = static_cast<int>(vmax) + 2;
  long g_buf[64];
  for (int d = 0; d <= max_depth; ++d) {
    int leaves = 1 << d;
    for (int n_indices = 0; n_indices <= max_n; ++n_indices) {
      std::vector<std::uint8_t> digits(
          static_cast<size_t>(n_indices) * leaves, 0);
      bool more = true;
      while (more) {
        unsigned full = (leaves == 32) ? 0xffffffffu : ((1u << leaves) - 1);
        for (unsigned mask = 1; mask <= full; ++mask) {
          ++res.instances;
          unsigned final_mask = 0;
          if (!propagate_kernel(leaves, n_indices, mask, digits.data(), undef,
                                g_buf, &final_mask)) {
            ++res.empty_chain_failures;
            continue;
          }
          int witness = 0;
          while (!((final_mask >> witness) & 1u)) ++witness;
          if (!verify_kernel(leaves, n_indices, mask, digits.data(), undef,
                             g_buf, witness))
            ++res.witness_failures;
        }
        // Mixed-radix odometer over the table digits.
        more = false;
        for (size_t pos = 0; pos < digits.size(); ++pos) {
          if (digits[pos] + 1 < base) {
            ++digits[pos];
            std::fill(digits.begin(), digits.begin() + pos, 0);
            more = true;
            break;
          }
        }
      }
    }
  }
  return res;
}

}  // namespace parw
