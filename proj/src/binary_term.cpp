#include "opf/binary_term.hpp"

#include <algorithm>

#include "opf/error.hpp"

namespace opf {

BinaryTerm BinaryTerm::leaf(Label l) {
  if (l < 1) throw Error("label must be >= 1, got " + std::to_string(l));
  BinaryTerm t;
  t.label_ = l;
  t.min_ = t.max_ = l;
  return t;
}

BinaryTerm BinaryTerm::product(BinaryTerm left, BinaryTerm right) {
  require_disjoint(left.labels(), right.labels());
  BinaryTerm t;
  t.size_ = left.size_ + right.size_;
  t.min_ = std::min(left.min_, right.min_);
  t.max_ = std::max(left.max_, right.max_);
  t.kids_ = std::make_shared<const Children>(Children{std::move(left), std::move(right)});
  return t;
}

const BinaryTerm& BinaryTerm::left() const {
  if (is_leaf()) throw Error("leaf has no left factor");
  return kids_->left;
}

const BinaryTerm& BinaryTerm::right() const {
  if (is_leaf()) throw Error("leaf has no right factor");
  return kids_->right;
}

std::vector<Label> BinaryTerm::labels() const {
  std::vector<Label> out;
  out.reserve(size_);
  collect(out);
  return out;
}

void BinaryTerm::collect(std::vector<Label>& out) const {
  if (is_leaf()) {
    out.push_back(label_);
    return;
  }
  kids_->left.collect(out);
  kids_->right.collect(out);
}

bool operator==(const BinaryTerm& a, const BinaryTerm& b) {
  if (a.is_leaf() != b.is_leaf() || a.size_ != b.size_) return false;
  if (a.is_leaf()) return a.label_ == b.label_;
  if (a.kids_ == b.kids_) return true;
  return a.kids_->left == b.kids_->left && a.kids_->right == b.kids_->right;
}

bool operator<(const BinaryTerm& a, const BinaryTerm& b) {
  // Leaves first, then by left factor, then right factor.
  if (a.is_leaf() != b.is_leaf()) return a.is_leaf();
  if (a.is_leaf()) return a.label_ < b.label_;
  if (a.kids_ == b.kids_) return false;
  if (a.kids_->left < b.kids_->left) return true;
  if (b.kids_->left < a.kids_->left) return false;
  return a.kids_->right < b.kids_->right;
}

std::string to_string(const BinaryTerm& t) {
  if (t.is_leaf()) return std::to_string(t.label());
  return "(" + to_string(t.left()) + "*" + to_string(t.right()) + ")";
}

bool is_normalized(const BinaryTerm& t) {
  if (t.is_leaf()) return true;
  return t.left().max_label() < t.right().max_label() && is_normalized(t.left()) &&
         is_normalized(t.right());
}

}  // namespace opf
