#include "opf/dendriform.hpp"

#include <map>
#include <utility>

#include "opf/error.hpp"

namespace opf {

namespace {

using Key = std::pair<PlanarBinaryTree, PlanarBinaryTree>;

void check_operands(const PlanarBinaryTree& t, const PlanarBinaryTree& s) {
  if (t.is_leaf() || s.is_leaf()) throw Error("dendriform product of an empty tree");
  if (t.labelled() != s.labelled())
    throw Error("dendriform operands disagree on generator labelling");
}

DendComb graft(const PlanarBinaryTree& left, const DendComb& right, GenIndex gen) {
  DendComb out;
  for (const auto& [r, c] : right) out.add_term(PlanarBinaryTree::node(left, r, gen), c);
  return out;
}

DendComb graft(const DendComb& left, const PlanarBinaryTree& right, GenIndex gen) {
  DendComb out;
  for (const auto& [l, c] : left) out.add_term(PlanarBinaryTree::node(l, right, gen), c);
  return out;
}

DendComb left_basis(const PlanarBinaryTree& t, const PlanarBinaryTree& s);
DendComb right_basis(const PlanarBinaryTree& t, const PlanarBinaryTree& s);

// r ≺ s + λ r ≻ s, with the leaf acting as a left unit
DendComb left_total(const PlanarBinaryTree& r, const PlanarBinaryTree& s) {
  if (r.is_leaf()) return DendComb(s);
  return left_basis(r, s) + right_basis(r, s) * LambdaPoly::lambda();
}

// λ t ≺ r + t ≻ r, with the leaf acting as a right unit
DendComb right_total(const PlanarBinaryTree& t, const PlanarBinaryTree& r) {
  if (r.is_leaf()) return DendComb(t);
  return left_basis(t, r) * LambdaPoly::lambda() + right_basis(t, r);
}

DendComb left_basis(const PlanarBinaryTree& t, const PlanarBinaryTree& s) {
  thread_local std::map<Key, DendComb> memo;
  Key key{t, s};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  DendComb out = graft(t.left(), left_total(t.right(), s), t.gen());
  memo.emplace(std::move(key), out);
  return out;
}

DendComb right_basis(const PlanarBinaryTree& t, const PlanarBinaryTree& s) {
  thread_local std::map<Key, DendComb> memo;
  Key key{t, s};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  DendComb out = graft(right_total(t, s.left()), s.right(), s.gen());
  memo.emplace(std::move(key), out);
  return out;
}

}  // namespace

DendComb dend_left(const PlanarBinaryTree& t, const PlanarBinaryTree& s) {
  check_operands(t, s);
  return left_basis(t, s);
}

DendComb dend_right(const PlanarBinaryTree& t, const PlanarBinaryTree& s) {
  check_operands(t, s);
  return right_basis(t, s);
}

DendComb dend_left(const DendComb& x, const DendComb& y) {
  if (x.empty() || y.empty()) return {};
  return bilinear(x, y, [](const PlanarBinaryTree& a, const PlanarBinaryTree& b) { return dend_left(a, b); });
}

DendComb dend_right(const DendComb& x, const DendComb& y) {
  if (x.empty() || y.empty()) return {};
  return bilinear(x, y, [](const PlanarBinaryTree& a, const PlanarBinaryTree& b) { return dend_right(a, b); });
}

DendComb dend_square(const DendComb& x, const DendComb& y) { return dend_left(x, y) - dend_right(x, y); }

DendComb dend_brace(const DendComb& x, const DendComb& y) { return dend_left(x, y) - dend_right(y, x); }

DendComb phi_recursion(const PlanarBinaryTree& t) {
  if (t.is_leaf()) throw Error("phi is not defined on the bare leaf");
  DendComb x(PlanarBinaryTree::generator(t.gen()));
  DendComb acc = t.left().is_leaf() ? x : dend_right(phi_recursion(t.left()), x);
  if (!t.right().is_leaf()) acc = dend_left(acc, phi_recursion(t.right()));
  return acc;
}

LinComb<PlanarBinaryTree, Rational> at_lambda(const DendComb& x, const Rational& value) {
  return x.map_scalars([&](const LambdaPoly& p) { return p.eval(value); });
}

}  // namespace opf
