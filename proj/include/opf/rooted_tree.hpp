#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace opf {

/// Vertex / leaf label. Always >= 1; distinct within one tree.
using Label = int;

/// Non-planar labelled rooted tree, the basis of the free pre-Lie and NAP
/// algebras.
///
/// Always held in canonical form: children sorted by the minimal label of
/// their subtree. Construction validates label distinctness and positivity,
/// so two equal trees compare equal structurally and print identically.
class RootedTree {
 public:
  explicit RootedTree(Label root);
  RootedTree(Label root, std::vector<RootedTree> children);

  Label root() const noexcept { return root_; }
  const std::vector<RootedTree>& children() const noexcept { return children_; }
  /// Number of subtrees attached to the root.
  std::size_t degree() const noexcept { return children_.size(); }
  std::size_t size() const noexcept { return size_; }
  Label min_label() const noexcept { return min_; }
  Label max_label() const noexcept { return max_; }
  bool is_single() const noexcept { return children_.empty(); }

  /// All labels in depth-first (root, then children in order) order.
  std::vector<Label> labels() const;
  /// (parent, child) pairs in depth-first order.
  std::vector<std::pair<Label, Label>> edges() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b);
  friend bool operator<(const RootedTree& a, const RootedTree& b);

 private:
  void collect_labels(std::vector<Label>& out) const;
  void collect_edges(std::vector<std::pair<Label, Label>>& out) const;

  Label root_;
  std::vector<RootedTree> children_;
  std::size_t size_ = 1;
  Label min_;
  Label max_;
};

/// Re-sorts children recursively. Constructors already do this, so this is the
/// identity on every RootedTree value; kept as the named entry point.
RootedTree canonicalize(const RootedTree& t);

/// "1(2,3(4))"
std::string to_string(const RootedTree& t);

/// Throws opf::Error unless the label sets of `a` and `b` are disjoint.
void require_disjoint(const std::vector<Label>& a, const std::vector<Label>& b);

}  // namespace opf
