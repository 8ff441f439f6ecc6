#pragma once

#include <string>

namespace ospcent {

// One verified identity or count; `details` carries the offending data on
// failure (always with exact rational rendering).
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string details;
};

}  // namespace ospcent
