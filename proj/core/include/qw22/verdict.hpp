#pragma once

#include <string>

namespace qw22 {

/// Outcome of an exact identity check.
struct Verdict {
  bool holds = false;
  /// Printed difference (or the exhibited violation for witness checks).
  std::string witness;
};

}  // namespace qw22
