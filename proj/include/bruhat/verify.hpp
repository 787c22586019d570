#pragma once

// Instance-level invariants of the descent, smoothness and lattice data for
// one (type, J).

#include <string>
#include <vector>

#include "bruhat/descent.hpp"

namespace bruhat {

struct Check {
  std::string name;
  bool ok;
  std::string detail;
  /// Reported only; never fails the run.
  bool informational = false;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool ok() const;
};

VerifyReport verify_instance(std::shared_ptr<const WeylGroup> group, NodeSet j,
                             std::uint64_t budget = kDefaultBudget);

}  // namespace bruhat
