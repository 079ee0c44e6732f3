#pragma once

#include <memory>
#include <string>

namespace opf {

/// Generator index carried by an internal node; 0 means "unlabelled".
using GenIndex = int;

/// Planar binary tree, the basis of free λ-dendriform and duplicial algebras.
/// A tree with n internal nodes has n+1 leaves. Internal nodes are either all
/// unlabelled or all carry a generator index >= 1.
class PlanarBinaryTree {
 public:
  /// The single leaf "o" (no internal node).
  static PlanarBinaryTree leaf();
  /// left ∨ right with generator `gen` (0 = unlabelled). Throws opf::Error if
  /// labelled and unlabelled nodes would be mixed.
  static PlanarBinaryTree node(PlanarBinaryTree left, PlanarBinaryTree right, GenIndex gen = 0);
  /// The 2-leaf tree (o,o), i.e. the image of a generator.
  static PlanarBinaryTree generator(GenIndex gen = 0) { return node(leaf(), leaf(), gen); }

  bool is_leaf() const noexcept { return kids_ == nullptr; }
  const PlanarBinaryTree& left() const;
  const PlanarBinaryTree& right() const;
  GenIndex gen() const noexcept { return gen_; }
  std::size_t leaves() const noexcept { return leaves_; }
  std::size_t internal_nodes() const noexcept { return leaves_ - 1; }
  /// True if internal nodes carry generator indices. False for a bare leaf.
  bool labelled() const noexcept { return labelled_; }

  friend bool operator==(const PlanarBinaryTree& a, const PlanarBinaryTree& b);
  friend bool operator<(const PlanarBinaryTree& a, const PlanarBinaryTree& b);

 private:
  struct Children;
  PlanarBinaryTree() = default;

  std::shared_ptr<const Children> kids_;
  GenIndex gen_ = 0;
  std::size_t leaves_ = 1;
  bool labelled_ = false;
};

struct PlanarBinaryTree::Children {
  PlanarBinaryTree left;
  PlanarBinaryTree right;
};

/// "o", "((o,o),o)", "((o,o):1,o):2"
std::string to_string(const PlanarBinaryTree& t);

}  // namespace opf
