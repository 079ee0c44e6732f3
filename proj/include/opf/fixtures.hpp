#pragma once

#include <string>
#include <vector>

#include "opf/json_io.hpp"
#include "opf/redblack.hpp"

namespace opf {

/// A worked coloring: tree string and its red edges.
struct ColoringCase {
  std::string tree;
  std::vector<Edge> red;
};

/// All 64 colored trees on {1,2,3,4}.
const std::vector<ColoringCase>& golden_colorings();

/// A worked display: `op` applied to `input` yields `expected` (a term or a
/// sum formatted with format_lincomb / to_string).
struct DisplayCase {
  std::string op;
  std::string input;
  std::string expected;
};

const std::vector<DisplayCase>& golden_displays();

/// Reference dimension lists.
std::vector<long long> reference_x_dims();  // arities 1..7
std::vector<long long> reference_y_dims();  // arities 1..5

/// Every golden case, for the `fixtures` command.
json fixtures_json();

}  // namespace opf
