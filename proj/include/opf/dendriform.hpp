#pragma once

#include "opf/lambda_poly.hpp"
#include "opf/lincomb.hpp"
#include "opf/planar_binary_tree.hpp"

namespace opf {

/// Elements of the free λ-dendriform algebra, coefficients polynomial in λ so
/// that one computation covers every value of the parameter.
using DendComb = LinComb<PlanarBinaryTree, LambdaPoly>;

// Basis-level products on planar binary trees t = t_l ∨ t_r, s = s_l ∨ s_r:
//
//   t ≺ s = t_l ∨ (t_r ≺ s + λ t_r ≻ s)      with  o ≺ s + λ o ≻ s := s
//   t ≻ s = (λ t ≺ s_l + t ≻ s_l) ∨ s_r      with  λ t ≺ o + t ≻ o := t
//
// These are the only formulas compatible with the middle relation, the outer
// relations, and the normal form φ(r∨s) = φ(r) ≻ x ≺ φ(s). Operands must have
// at least one internal node and agree on generator labelling.

DendComb dend_left(const PlanarBinaryTree& t, const PlanarBinaryTree& s);
DendComb dend_right(const PlanarBinaryTree& t, const PlanarBinaryTree& s);
DendComb dend_left(const DendComb& x, const DendComb& y);
DendComb dend_right(const DendComb& x, const DendComb& y);

/// x□y = x≺y − x≻y
DendComb dend_square(const DendComb& x, const DendComb& y);
/// {x,y} = x≺y − y≻x
DendComb dend_brace(const DendComb& x, const DendComb& y);

/// Evaluates φ(r∨s) = (φ(r) ≻ x) ≺ φ(s), φ(o∨o) = x, with the products above.
/// For a consistent implementation this returns exactly t with coefficient 1.
DendComb phi_recursion(const PlanarBinaryTree& t);

/// Specialise every λ-coefficient at a rational value.
LinComb<PlanarBinaryTree, Rational> at_lambda(const DendComb& x, const Rational& value);

}  // namespace opf
