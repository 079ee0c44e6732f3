#pragma once

#include <algorithm>
#include <optional>
#include <string>

namespace opf {

/// Resource bounds. Defaults keep every certified path at desk scale; `big`
/// paths are opt-in.
struct Bounds {
  int max_n = 6;           // certificates, exhaustive tree scans
  int big_max_n = 7;       // ceiling when --big is given
  int max_order = 10;      // series truncation
  int identity_labels = 5; // total labels in rooted-tree identity triples
  int dend_leaves = 7;     // leaves of the output tree in λ-dendriform checks
  int square_leaves = 6;   // leaves of the output tree in the lemma-square suite
  int max_matrix_entries = 40;  // millions of stored entries during rank elimination
};

/// Defaults, then the JSON file at `path` (unknown keys rejected), then
/// OPERAD_FOREST_MAX_N, which replaces max_n and raises big_max_n to match.
Bounds load_bounds(const std::optional<std::string>& path = std::nullopt);

/// Effective ceiling on n for a request.
inline int limit_n(const Bounds& b, bool big) { return big ? std::max(b.max_n, b.big_max_n) : b.max_n; }

}  // namespace opf
