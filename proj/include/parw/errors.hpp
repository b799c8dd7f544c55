#pragma once

#include <stdexcept>
#include <string>

namespace parw {

// Malformed input text (files, CLI literals).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A stated precondition does not hold (domain depth exceeded, family too
// short, non-convex weight passed to a convex-only routine, ...).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// Search-space guard tripped (brute-force oracle asked to enumerate more
// covers than the configured bound).
class InstanceTooLarge : public PreconditionError {
 public:
  explicit InstanceTooLarge(const std::string& what)
      : PreconditionError(what) {}
};

}  // namespace parw
