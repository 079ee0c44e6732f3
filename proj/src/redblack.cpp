#include "opf/redblack.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "opf/enumerate.hpp"
#include "opf/error.hpp"
#include "opf/maps.hpp"
#include "opf/parallel.hpp"

namespace opf {

namespace {

struct RootComponent {
  Label max;        // b', the maximum of the black component at the root
  bool all_black;   // T' == T
};

RootComponent color(const RootedTree& t, std::set<Edge>& red) {
  if (t.is_single()) return {t.root(), true};
  std::vector<RootComponent> sub;
  sub.reserve(t.degree());
  for (const auto& c : t.children()) sub.push_back(color(c, red));
  std::sort(sub.begin(), sub.end(), [](const RootComponent& a, const RootComponent& b) { return a.max < b.max; });

  const Label r = t.root();
  bool turn_red = r > sub.front().max;
  if (!turn_red)
    for (std::size_t i = 0; i + 1 < sub.size(); ++i)
      if (!sub[i].all_black) turn_red = true;

  if (turn_red) {
    for (const auto& c : t.children()) red.emplace(r, c.root());
    return {r, false};
  }
  bool all_black = std::all_of(sub.begin(), sub.end(), [](const RootComponent& c) { return c.all_black; });
  return {sub.back().max, all_black};
}

// Rebuilds the subtree hanging at `v` using only the edges accepted by `keep`.
template <class Keep>
RootedTree subtree(Label v, const std::map<Label, std::vector<Label>>& kids, Keep keep) {
  std::vector<RootedTree> out;
  if (auto it = kids.find(v); it != kids.end())
    for (Label c : it->second)
      if (keep(v, c)) out.push_back(subtree(c, kids, keep));
  return RootedTree(v, std::move(out));
}

}  // namespace

ColoredTree color_edges(const RootedTree& t) {
  ColoredTree out{t, {}};
  color(t, out.red_edges);
  return out;
}

Decomposition decompose(const RootedTree& t) {
  ColoredTree colored = color_edges(t);
  std::map<Label, std::vector<Label>> kids;
  for (const auto& [p, c] : t.edges()) kids[p].push_back(c);
  auto is_black = [&](Label p, Label c) { return colored.red_edges.count({p, c}) == 0; };

  // Component roots: the tree root plus every child end of a red edge.
  std::vector<Label> roots{t.root()};
  for (const auto& [p, c] : colored.red_edges) roots.push_back(c);

  std::vector<RootedTree> comps;
  for (Label r : roots) comps.push_back(subtree(r, kids, is_black));
  std::map<Label, std::size_t> block_of_root;  // component root -> index
  for (std::size_t i = 0; i < comps.size(); ++i) block_of_root[comps[i].root()] = i;

  std::map<Label, std::size_t> block_of;  // any label -> component index
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!is_type_a(comps[i]))
      throw std::logic_error("red/black decomposition produced a component outside A[S]: " + to_string(comps[i]));
    for (Label l : comps[i].labels()) block_of[l] = i;
  }

  // Skeleton edges between block maxima.
  std::map<Label, std::vector<Label>> skel_kids;
  for (const auto& [p, c] : colored.red_edges) {
    const RootedTree& upper = comps[block_of.at(p)];
    if (upper.max_label() != p)
      throw std::logic_error("red edge (" + std::to_string(p) + "," + std::to_string(c) +
                             ") does not leave the maximum of its component");
    skel_kids[p].push_back(comps[block_of_root.at(c)].max_label());
  }
  const Label skel_root = comps[0].max_label();
  RootedTree skeleton = subtree(skel_root, skel_kids, [](Label, Label) { return true; });

  std::vector<std::size_t> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return comps[a].max_label() < comps[b].max_label(); });
  Decomposition d{{}, {}, skeleton};
  for (std::size_t i : order) {
    std::vector<Label> block = comps[i].labels();
    std::sort(block.begin(), block.end());
    d.blocks.push_back(std::move(block));
    d.components.push_back(comps[i]);
  }
  return d;
}

RootedTree reconstruct(const Decomposition& d) {
  if (d.blocks.size() != d.components.size() || d.blocks.empty())
    throw Error("decomposition: blocks and components disagree");
  std::map<Label, std::size_t> by_max;
  std::set<Label> seen;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const RootedTree& comp = d.components[i];
    std::vector<Label> labels = comp.labels();
    std::sort(labels.begin(), labels.end());
    if (labels != d.blocks[i]) throw Error("decomposition: component labels differ from its block");
    if (!is_type_a(comp)) throw Error("decomposition: component " + to_string(comp) + " not in A[S]");
    for (Label l : labels)
      if (!seen.insert(l).second) throw Error("decomposition: blocks overlap at label " + std::to_string(l));
    by_max[comp.max_label()] = i;
  }
  std::vector<Label> skel_labels = d.skeleton.labels();
  std::sort(skel_labels.begin(), skel_labels.end());
  std::vector<Label> maxima;
  for (const auto& [m, i] : by_max) maxima.push_back(m);
  if (skel_labels != maxima) throw Error("decomposition: skeleton labels are not the block maxima");

  std::map<Label, std::vector<Label>> kids;
  for (const auto& comp : d.components)
    for (const auto& [p, c] : comp.edges()) kids[p].push_back(c);
  for (const auto& [p, c] : d.skeleton.edges()) kids[p].push_back(d.components[by_max.at(c)].root());
  Label root = d.components[by_max.at(d.skeleton.root())].root();
  return subtree(root, kids, [](Label, Label) { return true; });
}

bool is_x_tree(const RootedTree& t) {
  if (t.is_single()) return true;
  for (const auto& c : t.children())
    if (!is_x_tree(c)) return false;
  std::vector<const RootedTree*> sub;
  for (const auto& c : t.children()) sub.push_back(&c);
  std::sort(sub.begin(), sub.end(), [](const RootedTree* a, const RootedTree* b) { return a->root() < b->root(); });
  const Label r = t.root();
  if (r > sub.front()->root()) return true;
  if (sub.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < sub.size(); ++i)
    if (sub[i]->size() > 1) return true;
  return false;
}

std::size_t count_x_trees(int n, unsigned jobs) {
  if (n < 1 || n > 8) throw Error("count_x_trees: n outside [1,8]");
  auto trees = enumerate_rooted_trees(n, jobs);
  return static_cast<std::size_t>(std::count_if(trees.begin(), trees.end(), is_x_tree));
}

std::string to_string(const ColoredTree& c) {
  std::string out = to_string(c.tree) + " red=[";
  bool first = true;
  for (const auto& [p, ch] : c.red_edges) {
    if (!first) out += ',';
    first = false;
    out += "(" + std::to_string(p) + "," + std::to_string(ch) + ")";
  }
  return out + "]";
}

}  // namespace opf
