#pragma once

#include <memory>
#include <string>
#include <vector>

#include "opf/rooted_tree.hpp"

namespace opf {

/// Full binary tree with distinctly labelled leaves: a basis element of the
/// free magmatic algebra. Under the normalized writing (largest label always
/// in the right factor) the same type also serves as the ComMag basis.
class BinaryTerm {
 public:
  static BinaryTerm leaf(Label l);
  /// Throws opf::Error if the factors share a label.
  static BinaryTerm product(BinaryTerm left, BinaryTerm right);

  bool is_leaf() const noexcept { return kids_ == nullptr; }
  /// Only meaningful for leaves.
  Label label() const noexcept { return label_; }
  const BinaryTerm& left() const;
  const BinaryTerm& right() const;

  std::size_t size() const noexcept { return size_; }
  Label min_label() const noexcept { return min_; }
  Label max_label() const noexcept { return max_; }
  /// Leaf labels from left to right.
  std::vector<Label> labels() const;

  friend bool operator==(const BinaryTerm& a, const BinaryTerm& b);
  friend bool operator<(const BinaryTerm& a, const BinaryTerm& b);

 private:
  struct Children;
  BinaryTerm() = default;
  void collect(std::vector<Label>& out) const;

  Label label_ = 0;
  std::shared_ptr<const Children> kids_;
  std::size_t size_ = 1;
  Label min_ = 0;
  Label max_ = 0;
};

struct BinaryTerm::Children {
  BinaryTerm left;
  BinaryTerm right;
};

/// "(2*(1*3))"; a single leaf prints as its label.
std::string to_string(const BinaryTerm& t);

/// True iff at every product the factor holding the larger maximum is on the right.
bool is_normalized(const BinaryTerm& t);

}  // namespace opf
