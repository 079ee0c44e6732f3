#pragma once

#include <cstdint>
#include <vector>

#include "opf/binary_term.hpp"
#include "opf/planar_binary_tree.hpp"
#include "opf/rooted_tree.hpp"

namespace opf {

/// All n^(n-1) labelled rooted trees on {1..n}, sorted. 1 <= n <= 8.
std::vector<RootedTree> enumerate_rooted_trees(int n, unsigned jobs = 1);

/// All (2n-3)!! normalized ComMag terms on {1..n}. 1 <= n <= 9.
std::vector<BinaryTerm> enumerate_commag(int n);
/// Normalized ComMag terms on an arbitrary nonempty label set.
std::vector<BinaryTerm> enumerate_commag_on(const std::vector<Label>& labels);

/// Planar shapes with `leaves` leaves (Catalan(leaves-1) of them), each
/// repeated with every labelling by generators 1..g when g > 1.
/// For g == 1 the nodes stay unlabelled.
std::vector<PlanarBinaryTree> enumerate_pbt(int leaves, int generators = 1);

/// Basis of the ns operad Mag in arity n: one term per planar shape, leaves
/// labelled 1..n from left to right.
std::vector<BinaryTerm> enumerate_mag_planar(int n);

/// Multilinear basis of Mag(n): all shapes with all leaf orders, n!·Catalan(n-1).
std::vector<BinaryTerm> enumerate_mag(int n);

std::uint64_t double_factorial(int k);  // k!! with (-1)!! = 1
std::uint64_t catalan(int k);
std::uint64_t factorial(int k);
std::uint64_t int_pow(std::uint64_t base, int exp);

}  // namespace opf
