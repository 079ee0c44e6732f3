#include "opf/planar_binary_tree.hpp"

#include "opf/error.hpp"

namespace opf {

PlanarBinaryTree PlanarBinaryTree::leaf() { return PlanarBinaryTree(); }

PlanarBinaryTree PlanarBinaryTree::node(PlanarBinaryTree left, PlanarBinaryTree right, GenIndex gen) {
  if (gen < 0) throw Error("generator index must be >= 1");
  const bool labelled = gen != 0;
  for (const auto* side : {&left, &right})
    if (!side->is_leaf() && side->labelled_ != labelled)
      throw Error("planar binary tree mixes labelled and unlabelled internal nodes");
  PlanarBinaryTree t;
  t.gen_ = gen;
  t.labelled_ = labelled;
  t.leaves_ = left.leaves_ + right.leaves_;
  t.kids_ = std::make_shared<const Children>(Children{std::move(left), std::move(right)});
  return t;
}

const PlanarBinaryTree& PlanarBinaryTree::left() const {
  if (is_leaf()) throw Error("leaf has no left subtree");
  return kids_->left;
}

const PlanarBinaryTree& PlanarBinaryTree::right() const {
  if (is_leaf()) throw Error("leaf has no right subtree");
  return kids_->right;
}

bool operator==(const PlanarBinaryTree& a, const PlanarBinaryTree& b) {
  if (a.leaves_ != b.leaves_ || a.gen_ != b.gen_ || a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf() || a.kids_ == b.kids_) return true;
  return a.kids_->left == b.kids_->left && a.kids_->right == b.kids_->right;
}

bool operator<(const PlanarBinaryTree& a, const PlanarBinaryTree& b) {
  if (a.leaves_ != b.leaves_) return a.leaves_ < b.leaves_;
  if (a.is_leaf() || a.kids_ == b.kids_) return false;
  if (a.gen_ != b.gen_) return a.gen_ < b.gen_;
  if (a.kids_->left < b.kids_->left) return true;
  if (b.kids_->left < a.kids_->left) return false;
  return a.kids_->right < b.kids_->right;
}

std::string to_string(const PlanarBinaryTree& t) {
  if (t.is_leaf()) return "o";
  std::string out = "(" + to_string(t.left()) + "," + to_string(t.right()) + ")";
  if (t.gen() != 0) out += ":" + std::to_string(t.gen());
  return out;
}

}  // namespace opf
