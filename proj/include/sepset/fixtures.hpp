#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sepset {

struct Fixture {
  std::string name;  // also the file stem written by `fixtures --out`
  std::string text;
};

/// The EX, metric and global-2-family documents. Together their checks
/// cover every registered law id.
const std::vector<Fixture>& builtin_fixtures();
const Fixture* find_fixture(std::string_view name);

}  // namespace sepset
