#pragma once

#include <string>
#include <vector>

#include "stabdeg/degeneracy.hpp"

namespace stabdeg {

/// One reproduced reference value.
struct CatalogItem {
  std::string id;
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Recomputes every reference example. With `tamper` one expected value is
/// deliberately wrong, which must make the run fail.
std::vector<CatalogItem> run_reference_catalog(const EnumerationOptions& opts, bool tamper = false);

}  // namespace stabdeg
