#pragma once

#include <string>
#include <vector>

#include "degloci/certificate.hpp"

namespace degloci {

struct ValidationReport {
  bool valid = true;      // every recorded claim re-checks
  bool complete = true;   // no Unknown leaf
  std::vector<std::string> failures;
};

/// Re-derives every node of the tree from its recorded witness only.
ValidationReport validate(const Certificate& cert);

}  // namespace degloci
