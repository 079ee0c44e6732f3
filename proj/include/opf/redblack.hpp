#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "opf/rooted_tree.hpp"

namespace opf {

using Edge = std::pair<Label, Label>;  // (parent, child)

struct ColoredTree {
  RootedTree tree;
  std::set<Edge> red_edges;
};

/// Colors edges from the leaves down. At a vertex r whose subtrees have
/// root black components T'_i with maxima b'_1 < ... < b'_l, all edges out of
/// r turn red when r > b'_1, or when r < b'_1 and some T'_i with i < l is not
/// the whole subtree T_i. Otherwise they stay black.
ColoredTree color_edges(const RootedTree& t);

/// Black components (type-A trees) glued along red edges into a skeleton
/// whose vertices are the block maxima.
struct Decomposition {
  std::vector<std::vector<Label>> blocks;  // each sorted; blocks ordered by max
  std::vector<RootedTree> components;      // components[i] has label set blocks[i]
  RootedTree skeleton;
};

/// Cuts the red edges of color_edges(t). Self-checks every component; a
/// failure there is a logic_error (a coloring bug, not bad input).
Decomposition decompose(const RootedTree& t);

/// Reattaches each component's root to the maximum of the component it hangs
/// from. Throws opf::Error if `d` violates the decomposition invariants.
RootedTree reconstruct(const Decomposition& d);

/// Recursive characterization of all-red trees: children are all-red and
/// r > r_1, or r < r_1 with l > 1 and some T_i (i < l) of size > 1, where
/// subtrees are ordered by root label.
bool is_x_tree(const RootedTree& t);

/// Number of all-red trees on {1..n}, n <= 8.
std::size_t count_x_trees(int n, unsigned jobs = 1);

/// "1(3(2),4) red=[(1,3),(1,4),(3,2)]"
std::string to_string(const ColoredTree& c);

}  // namespace opf
