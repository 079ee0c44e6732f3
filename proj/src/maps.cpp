#include "opf/maps.hpp"

#include <algorithm>

#include "opf/error.hpp"

namespace opf {

BinaryTerm normalize_commag(const BinaryTerm& t) {
  if (t.is_leaf()) return t;
  BinaryTerm l = normalize_commag(t.left());
  BinaryTerm r = normalize_commag(t.right());
  if (l.max_label() > r.max_label()) std::swap(l, r);
  return BinaryTerm::product(std::move(l), std::move(r));
}

RootedTree psi(const BinaryTerm& t) {
  if (!is_normalized(t)) throw Error("psi expects a normalized term, got " + to_string(t));
  if (t.is_leaf()) return RootedTree(t.label());
  return nap_product(psi(t.left()), psi(t.right()));
}

bool is_type_a(const RootedTree& t) {
  if (t.is_single()) return true;
  Label least_max = t.children().front().max_label();
  for (const auto& c : t.children()) {
    if (!is_type_a(c)) return false;
    least_max = std::min(least_max, c.max_label());
  }
  return t.root() < least_max;
}

TypeACertificate type_a_certificate(const RootedTree& t) {
  if (!is_type_a(t)) throw Error("not in A[S]: " + to_string(t));
  TypeACertificate cert{t, std::nullopt, std::nullopt, std::nullopt};
  if (t.is_single()) return cert;
  const auto& kids = t.children();
  auto holder = std::max_element(kids.begin(), kids.end(), [](const RootedTree& a, const RootedTree& b) {
    return a.max_label() < b.max_label();
  });
  std::vector<RootedTree> rest;
  for (auto it = kids.begin(); it != kids.end(); ++it)
    if (it != holder) rest.push_back(*it);
  cert.x1 = RootedTree(t.root(), std::move(rest));
  cert.x2 = *holder;
  cert.d = holder->size();
  return cert;
}

BinaryTerm psi_inverse(const RootedTree& t) {
  TypeACertificate cert = type_a_certificate(t);
  if (cert.root_is_max()) return BinaryTerm::leaf(t.root());
  return BinaryTerm::product(psi_inverse(*cert.x1), psi_inverse(*cert.x2));
}

namespace {

TreeComb symmetrized(const BinaryTerm& t, TreeProduct kind) {
  if (t.is_leaf()) return TreeComb(RootedTree(t.label()));
  return sharp(kind, symmetrized(t.left(), kind), symmetrized(t.right(), kind));
}

}  // namespace

TreeComb phi(const BinaryTerm& t) { return symmetrized(normalize_commag(t), TreeProduct::PreLie); }

TreeComb phi_tilde(const BinaryTerm& t) { return symmetrized(normalize_commag(t), TreeProduct::Nap); }

MagComb commag_to_mag(const BinaryTerm& t) {
  if (t.is_leaf()) return MagComb(t);
  MagComb l = commag_to_mag(t.left());
  MagComb r = commag_to_mag(t.right());
  MagComb out;
  for (const auto& [a, ca] : l)
    for (const auto& [b, cb] : r) {
      out.add_term(BinaryTerm::product(a, b), ca * cb);
      out.add_term(BinaryTerm::product(b, a), ca * cb);
    }
  return out;
}

DendComb mag_to_dend(const BinaryTerm& t, const std::function<GenIndex(Label)>& generator_of) {
  if (t.is_leaf()) {
    GenIndex g = generator_of ? generator_of(t.label()) : 0;
    return DendComb(PlanarBinaryTree::generator(g));
  }
  return dend_square(mag_to_dend(t.left(), generator_of), mag_to_dend(t.right(), generator_of));
}

}  // namespace opf
