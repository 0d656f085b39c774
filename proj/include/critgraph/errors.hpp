#pragma once

#include <stdexcept>
#include <string>

namespace critgraph {

// An exhaustive routine refused to run because its enumeration or size cap
// would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// The hypothesis of a lemma check does not hold for the given instance, so
// the check has nothing to say about it.
class HypothesisNotMet : public std::runtime_error {
 public:
  explicit HypothesisNotMet(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace critgraph
