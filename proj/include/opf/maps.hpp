#pragma once

#include <functional>
#include <map>
#include <optional>

#include "opf/binary_term.hpp"
#include "opf/dendriform.hpp"
#include "opf/prelie.hpp"
#include "opf/rooted_tree.hpp"

namespace opf {

using MagComb = LinComb<BinaryTerm, Rational>;

/// Puts the factor holding the larger label on the right at every product.
BinaryTerm normalize_commag(const BinaryTerm& t);

/// Ψ(x·y) = Ψ(x) ~* Ψ(y), Ψ(a) = a. Throws unless `t` is normalized.
RootedTree psi(const BinaryTerm& t);

/// Membership in the image of Ψ: every root subtree is in it and the root is
/// smaller than the least of the subtree maxima.
bool is_type_a(const RootedTree& t);

/// Unique factorization T = X1 ~* X2 with max(T) in X2, and d(T) = |X2|.
/// A single vertex has no factorization (the root is the maximum).
struct TypeACertificate {
  RootedTree tree;
  std::optional<RootedTree> x1;
  std::optional<RootedTree> x2;
  std::optional<std::size_t> d;

  bool root_is_max() const { return !x2.has_value(); }
};

/// Throws opf::Error("not in A[S]") for trees outside the image of Ψ.
TypeACertificate type_a_certificate(const RootedTree& t);

/// Inverse of Ψ on type-A trees.
BinaryTerm psi_inverse(const RootedTree& t);

/// Φ(x·y) = Φ(x) # Φ(y) with the pre-Lie symmetrization.
TreeComb phi(const BinaryTerm& t);
/// Φ̃(x·y) = Φ̃(x) ~# Φ̃(y) with the NAP symmetrization.
TreeComb phi_tilde(const BinaryTerm& t);

/// Replaces every product u·v by uv + vu.
MagComb commag_to_mag(const BinaryTerm& t);

/// Evaluates each product of `t` as x□y in the free λ-dendriform algebra.
/// `generator_of` maps a leaf label to a generator index; without it every
/// leaf is the single unlabelled generator.
DendComb mag_to_dend(const BinaryTerm& t, const std::function<GenIndex(Label)>& generator_of = {});

}  // namespace opf
