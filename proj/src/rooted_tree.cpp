#include "opf/rooted_tree.hpp"

#include <algorithm>

#include "opf/error.hpp"

namespace opf {

namespace {

void check_label(Label l) {
  if (l < 1) throw Error("label must be >= 1, got " + std::to_string(l));
}

}  // namespace

RootedTree::RootedTree(Label root) : root_(root), min_(root), max_(root) { check_label(root); }

RootedTree::RootedTree(Label root, std::vector<RootedTree> children)
    : root_(root), children_(std::move(children)), min_(root), max_(root) {
  check_label(root);
  std::sort(children_.begin(), children_.end(),
            [](const RootedTree& a, const RootedTree& b) { return a.min_ < b.min_; });
  for (const auto& c : children_) {
    size_ += c.size_;
    min_ = std::min(min_, c.min_);
    max_ = std::max(max_, c.max_);
  }
  if (!children_.empty()) {
    std::vector<Label> all = labels();
    std::sort(all.begin(), all.end());
    auto dup = std::adjacent_find(all.begin(), all.end());
    if (dup != all.end()) throw Error("duplicate label " + std::to_string(*dup) + " in rooted tree");
  }
}

std::vector<Label> RootedTree::labels() const {
  std::vector<Label> out;
  out.reserve(size_);
  collect_labels(out);
  return out;
}

void RootedTree::collect_labels(std::vector<Label>& out) const {
  out.push_back(root_);
  for (const auto& c : children_) c.collect_labels(out);
}

std::vector<std::pair<Label, Label>> RootedTree::edges() const {
  std::vector<std::pair<Label, Label>> out;
  collect_edges(out);
  return out;
}

void RootedTree::collect_edges(std::vector<std::pair<Label, Label>>& out) const {
  for (const auto& c : children_) {
    out.emplace_back(root_, c.root_);
    c.collect_edges(out);
  }
}

bool operator==(const RootedTree& a, const RootedTree& b) {
  return a.root_ == b.root_ && a.size_ == b.size_ && a.children_ == b.children_;
}

bool operator<(const RootedTree& a, const RootedTree& b) {
  if (a.root_ != b.root_) return a.root_ < b.root_;
  return std::lexicographical_compare(a.children_.begin(), a.children_.end(), b.children_.begin(),
                                      b.children_.end());
}

RootedTree canonicalize(const RootedTree& t) {
  std::vector<RootedTree> kids;
  kids.reserve(t.degree());
  for (const auto& c : t.children()) kids.push_back(canonicalize(c));
  return RootedTree(t.root(), std::move(kids));
}

std::string to_string(const RootedTree& t) {
  std::string out = std::to_string(t.root());
  if (t.is_single()) return out;
  out += '(';
  bool first = true;
  for (const auto& c : t.children()) {
    if (!first) out += ',';
    first = false;
    out += to_string(c);
  }
  out += ')';
  return out;
}

void require_disjoint(const std::vector<Label>& a, const std::vector<Label>& b) {
  for (Label x : a)
    if (std::find(b.begin(), b.end(), x) != b.end())
      throw Error("operands share label " + std::to_string(x));
}

}  // namespace opf
