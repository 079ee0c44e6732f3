#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opf/certificate.hpp"
#include "opf/config.hpp"
#include "opf/json_io.hpp"
#include "opf/planar_binary_tree.hpp"
#include "opf/rooted_tree.hpp"

namespace opf {

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
  bool informational = false;  // reported, never affects the verdict
};

struct CheckReport {
  std::string suite;
  std::vector<Assertion> assertions;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
  void note(std::string name, std::string detail);
  json to_json() const;
  std::string to_text() const;
};

struct CheckOptions {
  std::optional<int> n;       // arity for injectivity; scan ceiling otherwise
  std::optional<int> order;   // series truncation
  std::optional<int> degree;  // total size bound for identity sweeps
  std::optional<CertMap> map;
  unsigned jobs = 1;
  bool big = false;
  Bounds bounds;
};

const std::vector<std::string>& check_suites();

/// Throws opf::Error for an unknown suite and ResourceError when a requested
/// size exceeds the bounds.
CheckReport run_check(std::string_view suite, const CheckOptions& opts);

// Building blocks shared with the test suites.

/// Trees (T, U, V) whose label sets partition {1..k} for some k <= max_labels.
std::vector<std::array<RootedTree, 3>> rooted_triples(int max_labels);
std::vector<std::array<RootedTree, 2>> rooted_pairs(int max_labels);

/// One-generator planar binary trees, each with at least one internal node,
/// whose grafted result has at most `max_leaves` leaves.
std::vector<std::array<PlanarBinaryTree, 3>> pbt_triples(int max_leaves);
std::vector<std::array<PlanarBinaryTree, 2>> pbt_pairs(int max_leaves);

/// Per-relation summary of the λ-dendriform residuals over pbt_triples.
struct DendRelationSummary {
  std::size_t triples = 0;
  std::array<std::size_t, 3> nonzero{};                 // triples with a nonzero residual
  std::array<std::size_t, 3> nonzero_at_zero{};         // ... after setting λ = 0
  std::array<std::size_t, 3> nonzero_at_one{};          // λ = 1
  std::array<std::size_t, 3> nonzero_at_minus_one{};    // λ = -1
  std::array<std::string, 3> example;                   // first nonzero residual
  std::size_t duplicial_failures = 0;                   // ≺ or ≻ not associative at λ = 0
};

DendRelationSummary dend_relation_summary(int max_leaves, unsigned jobs = 1);

}  // namespace opf
