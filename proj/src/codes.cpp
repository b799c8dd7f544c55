#include "parw/codes.hpp"

#include <algorithm>

#include "parw/errors.hpp"

namespace parw {

KraftChaitinResult kraft_chaitin_assign(
    const std::vector<CodeRequest>& requests) {
  KraftChaitinResult res;
  std::vector<BitString> free_set{BitString()};  // antichain, distinct lengths
  for (size_t idx = 0; idx < requests.size(); ++idx) {
    const auto& req = requests[idx];
    if (req.length < 0)
      throw PreconditionError("kraft_chaitin_assign: negative length");
    res.kraft_sum += Rational::pow2(-req.length);

    // Longest free string of length <= l.
    int pick = -1;
    for (size_t j = 0; j < free_set.size(); ++j)
      if (free_set[j].length() <= req.length &&
          (pick < 0 || free_set[j].length() > free_set[pick].length()))
        pick = static_cast<int>(j);
    if (pick < 0) {
      res.failed_index = idx;
      return res;
    }
    BitString word = free_set[pick];
    free_set.erase(free_set.begin() + pick);
    while (word.length() < req.length) {
      free_set.push_back(word.extended(1));
      word = word.extended(0);
    }
    res.codewords.push_back({req.label, word});
  }
  res.ok = true;
  return res;
}

}  // namespace parw
