#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "parw/bitstring.hpp"
#include "parw/errors.hpp"

namespace parw {

// Finite stand-in for an effectively closed class: the leaves of depth d
// that survive. Nonempty, all leaves the same length.
class FinitePiClass {
 public:
  FinitePiClass(int depth, std::vector<BitString> leaves);
  int depth() const { return depth_; }
  const std::vector<BitString>& leaves() const { return leaves_; }

 private:
  int depth_;
  std::vector<BitString> leaves_;
};

// Partial map (index n, leaf) -> natural value; absent pairs are divergent
// computations.
class OracleTable {
 public:
  OracleTable(int num_indices, std::map<std::pair<int, BitString>, long> vals);
  int num_indices() const { return num_indices_; }
  std::optional<long> value(int n, const BitString& leaf) const;

 private:
  int num_indices_;
  std::map<std::pair<int, BitString>, long> values_;
};

// Leaves surviving the avoidance constraints of the history: for each
// n < |history|, the oracle value at (n, leaf) is undefined or differs from
// history[n].
std::vector<BitString> restrict_class(const FinitePiClass& q,
                                      const OracleTable& t,
                                      const std::vector<long>& history);

// The diagonal value propagated to the restricted class: m when the oracle
// is defined and equal to m on every surviving leaf, undefined otherwise.
// The restricted class must be nonempty.
std::optional<long> derived_diagonal(const FinitePiClass& q,
                                     const OracleTable& t, int n,
                                     const std::vector<long>& history);

struct PropagationRun {
  std::vector<long> g;
  std::vector<std::vector<BitString>> chain;  // chain[n] = leaves after g|n
  BitString witness;
};

// g(n) avoids the derived diagonal (m -> m+1, undefined -> 0); every chain
// element must stay nonempty — an empty one would refute the induction and
// raises a logic error.
PropagationRun run_propagation(const FinitePiClass& q, const OracleTable& t);

struct WitnessReport {
  bool nesting_ok = false;
  bool membership_ok = false;
  bool diagonal_ok = false;
  bool pass() const { return nesting_ok && membership_ok && diagonal_ok; }
};

// Independent re-check: chain nesting, witness membership in every chain
// element, and g(n) avoiding the oracle at the witness for all n.
WitnessReport verify_witness(const PropagationRun& run,
                             const FinitePiClass& q, const OracleTable& t);

// Packed single-instance kernel shared with the exhaustive sweep. digits
// holds n_indices * 2^depth codes, one per (index, leaf) pair in leaf-major
// order within each index; undef_code marks divergence.
struct PackedOutcome {
  bool empty_chain = false;
  bool witness_ok = false;
  std::vector<long> g;
  int witness_leaf = -1;
};

PackedOutcome dnr_propagate_packed(int depth, int n_indices,
                                   unsigned leaf_mask,
                                   const std::vector<std::uint8_t>& digits,
                                   std::uint8_t undef_code);

struct SweepResult {
  std::uint64_t instances = 0;
  std::uint64_t empty_chain_failures = 0;
  std::uint64_t witness_failures = 0;
  bool pass() const {
    return empty_chain_failures == 0 && witness_failures == 0;
  }
};

// Exhaustive finite-model check over every nonempty class of leaf depth
// <= max_depth, every index count <= max_n, and every assignment of
// {0..vmax, undefined} to the (index, leaf) pairs.
SweepResult dnr_exhaustive_sweep(int max_depth, int max_n, long vmax);

}  // namespace parw
