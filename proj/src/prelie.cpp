#include "opf/prelie.hpp"

#include <string>

#include "opf/error.hpp"

namespace opf {

namespace {

// Every tree obtained by grafting y onto one vertex of t, vertices visited
// depth-first with children in canonical order.
std::vector<RootedTree> graft_everywhere(const RootedTree& t, const RootedTree& y) {
  std::vector<RootedTree> out;
  std::vector<RootedTree> kids = t.children();
  kids.push_back(y);
  out.emplace_back(t.root(), std::move(kids));
  for (std::size_t i = 0; i < t.degree(); ++i) {
    for (auto& grafted : graft_everywhere(t.children()[i], y)) {
      std::vector<RootedTree> replaced = t.children();
      replaced[i] = std::move(grafted);
      out.emplace_back(t.root(), std::move(replaced));
    }
  }
  return out;
}

}  // namespace

TreeComb prelie_product(const RootedTree& t, const RootedTree& y) {
  require_disjoint(t.labels(), y.labels());
  TreeComb out;
  for (const auto& g : graft_everywhere(t, y)) out.add_term(g, Rational(1));
  return out;
}

TreeComb prelie_product(const TreeComb& x, const TreeComb& y) {
  return bilinear(x, y, [](const RootedTree& a, const RootedTree& b) { return prelie_product(a, b); });
}

RootedTree nap_product(const RootedTree& t, const RootedTree& y) {
  require_disjoint(t.labels(), y.labels());
  std::vector<RootedTree> kids = t.children();
  kids.push_back(y);
  return RootedTree(t.root(), std::move(kids));
}

TreeComb nap_product(const TreeComb& x, const TreeComb& y) {
  return bilinear(x, y, [](const RootedTree& a, const RootedTree& b) { return TreeComb(nap_product(a, b)); });
}

TreeProduct parse_tree_product(std::string_view name) {
  if (name == "prelie") return TreeProduct::PreLie;
  if (name == "nap") return TreeProduct::Nap;
  throw Error("unknown tree product '" + std::string(name) + "'");
}

TreeComb sharp(TreeProduct kind, const TreeComb& x, const TreeComb& y) {
  if (kind == TreeProduct::PreLie) return prelie_product(x, y) + prelie_product(y, x);
  return nap_product(x, y) + nap_product(y, x);
}

}  // namespace opf
