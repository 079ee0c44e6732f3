#include "opf/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "opf/error.hpp"
#include "opf/parallel.hpp"

namespace opf {

namespace {

void require_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw Error(std::string(what) + ": n=" + std::to_string(n) + " outside [" + std::to_string(lo) +
                "," + std::to_string(hi) + "]");
}

RootedTree build(Label v, const std::vector<std::vector<Label>>& kids) {
  std::vector<RootedTree> sub;
  sub.reserve(kids[v].size());
  for (Label c : kids[v]) sub.push_back(build(c, kids));
  return RootedTree(v, std::move(sub));
}

// Trees rooted at r: every parent map on {1..n}\{r} whose iteration reaches r.
std::vector<RootedTree> trees_with_root(int n, Label root) {
  std::vector<RootedTree> out;
  std::vector<Label> others;
  for (Label v = 1; v <= n; ++v)
    if (v != root) others.push_back(v);
  const std::size_t m = others.size();
  std::vector<Label> parent(n + 1, 0);
  std::vector<std::size_t> digit(m, 0);
  std::vector<int> state(n + 1);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i) {
      parent[others[i]] = static_cast<Label>(digit[i] + 1);
      if (parent[others[i]] == others[i]) ok = false;
    }
    if (ok) {
      // 0 = unvisited, 1 = on current path, 2 = known to reach the root
      std::fill(state.begin(), state.end(), 0);
      state[root] = 2;
      for (Label v : others) {
        Label u = v;
        while (state[u] == 0) {
          state[u] = 1;
          u = parent[u];
        }
        if (state[u] == 1) {
          ok = false;
          break;
        }
        for (u = v; state[u] == 1; u = parent[u]) state[u] = 2;
      }
    }
    if (ok) {
      std::vector<std::vector<Label>> kids(n + 1);
      for (Label v : others) kids[parent[v]].push_back(v);
      out.push_back(build(root, kids));
    }
    std::size_t i = 0;
    while (i < m && ++digit[i] == static_cast<std::size_t>(n)) digit[i++] = 0;
    if (i == m) break;
  }
  return out;
}

std::vector<PlanarBinaryTree> shapes(int internal) {
  if (internal == 0) return {PlanarBinaryTree::leaf()};
  std::vector<PlanarBinaryTree> out;
  for (int k = 0; k < internal; ++k)
    for (const auto& l : shapes(k))
      for (const auto& r : shapes(internal - 1 - k)) out.push_back(PlanarBinaryTree::node(l, r));
  return out;
}

std::vector<PlanarBinaryTree> labellings(const PlanarBinaryTree& t, int g) {
  if (t.is_leaf()) return {t};
  std::vector<PlanarBinaryTree> out;
  auto ls = labellings(t.left(), g);
  auto rs = labellings(t.right(), g);
  for (GenIndex gen = 1; gen <= g; ++gen)
    for (const auto& l : ls)
      for (const auto& r : rs) out.push_back(PlanarBinaryTree::node(l, r, gen));
  return out;
}

BinaryTerm label_shape(const PlanarBinaryTree& shape, const std::vector<Label>& labels, std::size_t& next) {
  if (shape.is_leaf()) return BinaryTerm::leaf(labels[next++]);
  BinaryTerm l = label_shape(shape.left(), labels, next);
  BinaryTerm r = label_shape(shape.right(), labels, next);
  return BinaryTerm::product(std::move(l), std::move(r));
}

}  // namespace

std::vector<RootedTree> enumerate_rooted_trees(int n, unsigned jobs) {
  require_range(n, 1, 8, "enumerate_rooted_trees");
  auto parts = parallel_map(static_cast<std::size_t>(n), jobs,
                            [n](std::size_t i) { return trees_with_root(n, static_cast<Label>(i + 1)); });
  std::vector<RootedTree> out;
  out.reserve(int_pow(n, n - 1));
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BinaryTerm> enumerate_commag_on(const std::vector<Label>& labels) {
  if (labels.empty()) throw Error("enumerate_commag_on: empty label set");
  std::vector<Label> s = labels;
  std::sort(s.begin(), s.end());
  if (s.size() == 1) return {BinaryTerm::leaf(s[0])};
  // The right factor holds max(s); choose which of the others join it.
  const std::size_t rest = s.size() - 1;
  std::vector<BinaryTerm> out;
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << rest); ++mask) {
    std::vector<Label> left, right{s.back()};
    for (std::size_t i = 0; i < rest; ++i) ((mask >> i) & 1 ? right : left).push_back(s[i]);
    auto ls = enumerate_commag_on(left);
    auto rs = enumerate_commag_on(right);
    for (const auto& l : ls)
      for (const auto& r : rs) out.push_back(BinaryTerm::product(l, r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BinaryTerm> enumerate_commag(int n) {
  require_range(n, 1, 9, "enumerate_commag");
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  return enumerate_commag_on(labels);
}

std::vector<PlanarBinaryTree> enumerate_pbt(int leaves, int generators) {
  if (leaves < 1) throw Error("enumerate_pbt: leaves must be >= 1");
  if (generators < 1) throw Error("enumerate_pbt: generators must be >= 1");
  auto base = shapes(leaves - 1);
  if (generators == 1) return base;
  std::vector<PlanarBinaryTree> out;
  for (const auto& s : base) {
    auto ls = labellings(s, generators);
    out.insert(out.end(), ls.begin(), ls.end());
  }
  return out;
}

std::vector<BinaryTerm> enumerate_mag_planar(int n) {
  if (n < 1) throw Error("enumerate_mag_planar: n must be >= 1");
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<BinaryTerm> out;
  for (const auto& s : shapes(n - 1)) {
    std::size_t next = 0;
    out.push_back(label_shape(s, labels, next));
  }
  return out;
}

std::vector<BinaryTerm> enumerate_mag(int n) {
  if (n < 1 || n > 8) throw Error("enumerate_mag: n outside [1,8]");
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  auto base = shapes(n - 1);
  std::vector<BinaryTerm> out;
  do {
    for (const auto& s : base) {
      std::size_t next = 0;
      out.push_back(label_shape(s, labels, next));
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t double_factorial(int k) {
  std::uint64_t r = 1;
  for (int i = k; i > 1; i -= 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t catalan(int k) {
  if (k < 0) return 0;
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::uint64_t factorial(int k) {
  std::uint64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t int_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace opf
