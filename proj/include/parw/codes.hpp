#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parw/bitstring.hpp"
#include "parw/rational.hpp"

namespace parw {

struct CodeRequest {
  std::string label;
  long length = 0;  // >= 0
};

struct CodeAssignment {
  std::string label;
  BitString codeword;
};

struct KraftChaitinResult {
  bool ok = false;
  std::vector<CodeAssignment> codewords;     // complete on success
  std::optional<size_t> failed_index;        // first unservable request
  Rational kraft_sum;  // running sum through the last request attempted
};

// Serves requests from a free antichain initialized to {e}: each request
// takes the longest free string of length <= l, pads it with 0s to length l,
// and returns the siblings along the padding path to the free set. The free
// set always holds at most one string per length, so a request is servable
// exactly when the running Kraft sum stays <= 1.
KraftChaitinResult kraft_chaitin_assign(
    const std::vector<CodeRequest>& requests);

}  // namespace parw
