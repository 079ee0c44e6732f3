#pragma once

#include <string_view>

#include "opf/lincomb.hpp"
#include "opf/rational.hpp"
#include "opf/rooted_tree.hpp"

namespace opf {

using TreeComb = LinComb<RootedTree, Rational>;

/// Pre-Lie grafting: the sum over vertices v of T of the tree obtained by
/// attaching the root of Y to v. Label sets must be disjoint.
TreeComb prelie_product(const RootedTree& t, const RootedTree& y);
TreeComb prelie_product(const TreeComb& x, const TreeComb& y);

/// NAP product: attach the root of Y as a new child of the root of T.
RootedTree nap_product(const RootedTree& t, const RootedTree& y);
TreeComb nap_product(const TreeComb& x, const TreeComb& y);

enum class TreeProduct { PreLie, Nap };

TreeProduct parse_tree_product(std::string_view name);

/// Symmetrization x*y + y*x of the chosen product.
TreeComb sharp(TreeProduct kind, const TreeComb& x, const TreeComb& y);

}  // namespace opf
