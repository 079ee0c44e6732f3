#include "opf/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "opf/assoc.hpp"
#include "opf/enumerate.hpp"
#include "opf/error.hpp"
#include "opf/fixtures.hpp"
#include "opf/maps.hpp"
#include "opf/matrix.hpp"
#include "opf/parallel.hpp"
#include "opf/parse.hpp"
#include "opf/prelie.hpp"
#include "opf/redblack.hpp"
#include "opf/series.hpp"

namespace opf {

bool CheckReport::passed() const {
  for (const auto& a : assertions)
    if (!a.informational && !a.passed) return false;
  return true;
}

void CheckReport::add(std::string name, bool ok, std::string detail) {
  assertions.push_back({std::move(name), ok, std::move(detail), false});
}

void CheckReport::note(std::string name, std::string detail) {
  assertions.push_back({std::move(name), true, std::move(detail), true});
}

json CheckReport::to_json() const {
  json out;
  out["suite"] = suite;
  json list = json::array();
  for (const auto& a : assertions) {
    json j;
    j["name"] = a.name;
    j["status"] = a.informational ? "info" : (a.passed ? "pass" : "fail");
    if (!a.detail.empty()) j["detail"] = a.detail;
    list.push_back(std::move(j));
  }
  out["assertions"] = list;
  out["verdict"] = passed() ? "pass" : "fail";
  return out;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  for (const auto& a : assertions) {
    os << (a.informational ? "INFO " : (a.passed ? "PASS " : "FAIL ")) << suite << ": " << a.name;
    if (!a.detail.empty()) os << " -- " << a.detail;
    os << '\n';
  }
  os << (passed() ? "PASS " : "FAIL ") << suite << '\n';
  return os.str();
}

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> names = {"prelie-identity", "nap-identity", "dend-relations", "phi-recursion",
                                                 "injectivity",     "roundtrip",    "redblack-golden", "jordan",
                                                 "lemma-square",    "series",       "filtration"};
  return names;
}

namespace {

RootedTree relabel(const RootedTree& t, const std::vector<Label>& to) {
  std::vector<RootedTree> kids;
  for (const auto& c : t.children()) kids.push_back(relabel(c, to));
  return RootedTree(to[static_cast<std::size_t>(t.root() - 1)], std::move(kids));
}

// Calls f(blocks) for every assignment of {1..k} to `parts` nonempty ordered blocks.
void for_each_ordered_partition(int k, int parts, const std::function<void(const std::vector<std::vector<Label>>&)>& f) {
  std::vector<int> assign(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<std::vector<Label>> blocks(static_cast<std::size_t>(parts));
    for (int i = 0; i < k; ++i) blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])].push_back(i + 1);
    bool nonempty = true;
    for (const auto& b : blocks) nonempty = nonempty && !b.empty();
    if (nonempty) f(blocks);
    int i = 0;
    while (i < k && ++assign[static_cast<std::size_t>(i)] == parts) assign[static_cast<std::size_t>(i++)] = 0;
    if (i == k) return;
  }
}

template <class T, std::size_t P, std::size_t... I>
std::array<T, P> to_array(const std::vector<T>& v, std::index_sequence<I...>) {
  return {v[I]...};
}

template <std::size_t P>
std::vector<std::array<RootedTree, P>> rooted_tuples(int max_labels) {
  std::map<int, std::vector<RootedTree>> shapes;
  auto trees_on = [&](int n) -> const std::vector<RootedTree>& {
    auto it = shapes.find(n);
    if (it == shapes.end()) it = shapes.emplace(n, enumerate_rooted_trees(n)).first;
    return it->second;
  };
  std::vector<std::array<RootedTree, P>> out;
  for (int k = static_cast<int>(P); k <= max_labels; ++k)
    for_each_ordered_partition(k, static_cast<int>(P), [&](const std::vector<std::vector<Label>>& blocks) {
      std::vector<std::vector<RootedTree>> choices;
      for (const auto& b : blocks) {
        std::vector<RootedTree> c;
        for (const auto& t : trees_on(static_cast<int>(b.size()))) c.push_back(relabel(t, b));
        choices.push_back(std::move(c));
      }
      std::array<std::size_t, P> idx{};
      while (true) {
        std::vector<RootedTree> tuple;
        for (std::size_t i = 0; i < P; ++i) tuple.push_back(choices[i][idx[i]]);
        out.push_back(to_array<RootedTree, P>(tuple, std::make_index_sequence<P>{}));
        std::size_t i = 0;
        while (i < P && ++idx[i] == choices[i].size()) idx[i++] = 0;
        if (i == P) break;
      }
    });
  return out;
}

template <std::size_t P>
std::vector<std::array<PlanarBinaryTree, P>> pbt_tuples(int max_leaves) {
  // Internal node counts a_i >= 1 with sum <= max_leaves - 1.
  const int budget = max_leaves - 1;
  std::vector<std::vector<PlanarBinaryTree>> by_size(static_cast<std::size_t>(std::max(budget, 0) + 1));
  for (int a = 1; a <= budget; ++a) by_size[static_cast<std::size_t>(a)] = enumerate_pbt(a + 1, 1);
  std::vector<std::array<PlanarBinaryTree, P>> out;
  std::vector<PlanarBinaryTree> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos == P) {
      out.push_back(to_array<PlanarBinaryTree, P>(cur, std::make_index_sequence<P>{}));
      return;
    }
    const int reserve = static_cast<int>(P - pos - 1);
    for (int a = 1; a <= left - reserve; ++a)
      for (const auto& t : by_size[static_cast<std::size_t>(a)]) {
        cur.push_back(t);
        rec(pos + 1, left - a);
        cur.pop_back();
      }
  };
  if (budget >= static_cast<int>(P)) rec(0, budget);
  return out;
}

DendComb one(const PlanarBinaryTree& t) { return DendComb(t, LambdaPoly(1)); }
TreeComb one(const RootedTree& t) { return TreeComb(t, Rational(1)); }

std::string sizes_note(std::size_t count, const std::string& what) { return std::to_string(count) + " " + what; }

int resolve_n(const CheckOptions& o, int fallback) {
  int n = o.n.value_or(fallback);
  int limit = limit_n(o.bounds, o.big);
  if (n > limit)
    throw ResourceError("n = " + std::to_string(n) + " exceeds the configured bound " + std::to_string(limit) +
                        (o.big ? "" : " (use --big or raise max_n)"));
  if (n < 1) throw Error("n must be positive");
  return n;
}

int resolve_degree(const CheckOptions& o, int fallback, int hard_max) {
  int d = o.degree.value_or(fallback);
  if (d > hard_max) throw ResourceError("degree " + std::to_string(d) + " exceeds the bound " + std::to_string(hard_max));
  return d;
}

// ---------------------------------------------------------------- suites

CheckReport prelie_identity(const CheckOptions& o) {
  CheckReport r{"prelie-identity", {}};
  const int k = resolve_degree(o, o.bounds.identity_labels, 7);
  auto triples = rooted_triples(k);
  auto bad = parallel_map(triples.size(), o.jobs, [&](std::size_t i) {
    const auto& [t, u, v] = triples[i];
    TreeComb T = one(t), U = one(u), V = one(v);
    TreeComb lhs = prelie_product(prelie_product(T, U), V) - prelie_product(T, prelie_product(U, V));
    TreeComb rhs = prelie_product(prelie_product(T, V), U) - prelie_product(T, prelie_product(V, U));
    return lhs == rhs ? 0 : 1;
  });
  std::size_t failures = 0;
  for (int b : bad) failures += static_cast<std::size_t>(b);
  r.add("associator symmetric in the last two arguments", failures == 0,
        sizes_note(triples.size(), "triples, total labels <= " + std::to_string(k)) + ", " + std::to_string(failures) +
            " failures");
  TreeComb example = prelie_product(one(parse_rooted("3(1,4)")), one(parse_rooted("2")));
  r.add("3(1,4) * 2", format_lincomb(example) == "3(1(2),4) + 3(1,2,4) + 3(1,4(2))", format_lincomb(example));
  return r;
}

CheckReport nap_identity(const CheckOptions& o) {
  CheckReport r{"nap-identity", {}};
  const int k = resolve_degree(o, o.bounds.identity_labels, 7);
  auto triples = rooted_triples(k);
  std::size_t failures = 0;
  for (const auto& [t, u, v] : triples)
    if (!(nap_product(nap_product(t, u), v) == nap_product(nap_product(t, v), u))) ++failures;
  r.add("(xy)z = (xz)y", failures == 0,
        sizes_note(triples.size(), "triples, total labels <= " + std::to_string(k)) + ", " + std::to_string(failures) +
            " failures");
  return r;
}

CheckReport filtration(const CheckOptions& o) {
  CheckReport r{"filtration", {}};
  const int k = resolve_degree(o, o.bounds.identity_labels + 1, 8);
  auto pairs = rooted_pairs(k);
  std::size_t bad_coeff = 0, bad_degree = 0;
  for (const auto& [t, y] : pairs) {
    TreeComb p = prelie_product(t, y);
    RootedTree top = nap_product(t, y);
    if (!(p.coeff(top) == Rational(1))) ++bad_coeff;
    for (const auto& [s, c] : p)
      if (!(s == top) && s.degree() != t.degree()) ++bad_degree;
  }
  r.add("coefficient of T ~* Y in T * Y is 1", bad_coeff == 0,
        sizes_note(pairs.size(), "pairs, |T|+|Y| <= " + std::to_string(k)) + ", " + std::to_string(bad_coeff) +
            " failures");
  r.add("other support trees keep root degree deg(T)", bad_degree == 0, std::to_string(bad_degree) + " failures");
  return r;
}

CheckReport dend_relations(const CheckOptions& o) {
  CheckReport r{"dend-relations", {}};
  const int leaves = resolve_degree(o, o.bounds.dend_leaves, 9);
  DendRelationSummary s = dend_relation_summary(leaves, o.jobs);
  const std::string scope = sizes_note(s.triples, "triples, <= " + std::to_string(leaves) + " leaves");
  static const char* names[3] = {"(x<y)<z = x<(y<z) + λ x<(y>z)", "(x>y)<z = x>(y<z)",
                                 "λ (x<y)>z + (x>y)>z = x>(y>z)"};
  for (int i = 0; i < 3; ++i) {
    std::string detail = scope + ", " + std::to_string(s.nonzero[static_cast<std::size_t>(i)]) + " nonzero";
    if (!s.example[static_cast<std::size_t>(i)].empty()) detail += "; e.g. " + s.example[static_cast<std::size_t>(i)];
    r.add(std::string("relation ") + std::to_string(i + 1) + " as a polynomial in λ: " + names[i],
          s.nonzero[static_cast<std::size_t>(i)] == 0, detail);
  }
  for (int i = 0; i < 3; ++i) {
    const auto k = static_cast<std::size_t>(i);
    r.note("relation " + std::to_string(i + 1) + " at λ = 0, 1, -1",
           std::to_string(s.nonzero_at_zero[k]) + ", " + std::to_string(s.nonzero_at_one[k]) + ", " +
               std::to_string(s.nonzero_at_minus_one[k]) + " nonzero");
  }
  r.add("duplicial: < and > associative at λ = 0", s.duplicial_failures == 0,
        std::to_string(s.duplicial_failures) + " failures");
  return r;
}

CheckReport phi_recursion_suite(const CheckOptions& o) {
  CheckReport r{"phi-recursion", {}};
  const int leaves = resolve_degree(o, o.bounds.dend_leaves, 10);
  std::size_t checked = 0, failures = 0;
  std::string first;
  for (int k = 2; k <= leaves; ++k)
    for (const auto& t : enumerate_pbt(k, 1)) {
      ++checked;
      DendComb v = phi_recursion(t);
      if (!(v == one(t))) {
        ++failures;
        if (first.empty()) first = to_string(t) + " -> " + format_lincomb(v);
      }
    }
  r.add("φ recursion returns each tree with coefficient 1", failures == 0,
        sizes_note(checked, "trees, <= " + std::to_string(leaves) + " leaves") + ", " + std::to_string(failures) +
            " failures" + (first.empty() ? "" : "; e.g. " + first));
  return r;
}

std::size_t expected_rank(CertMap m, int n) {
  return m == CertMap::MagToDend ? catalan(n - 1) : double_factorial(2 * n - 3);
}

CheckReport injectivity(const CheckOptions& o) {
  CheckReport r{"injectivity", {}};
  std::vector<CertMap> maps = o.map ? std::vector<CertMap>{*o.map}
                                    : std::vector<CertMap>{CertMap::Phi, CertMap::PhiTilde, CertMap::ComMagToMag,
                                                           CertMap::MagToDend};
  std::vector<int> arities;
  if (o.n)
    arities.push_back(resolve_n(o, *o.n));
  else
    for (int n = 1; n <= o.bounds.max_n; ++n) arities.push_back(n);
  CertificateOptions copts;
  copts.jobs = o.jobs;
  copts.max_n = limit_n(o.bounds, o.big);
  copts.max_entries = static_cast<std::size_t>(o.bounds.max_matrix_entries) * 1'000'000;
  for (CertMap m : maps)
    for (int n : arities) {
      std::vector<Rational> lambdas = m == CertMap::MagToDend ? std::vector<Rational>{0, 1} : std::vector<Rational>{1};
      for (const auto& lam : lambdas) {
        copts.lambda = lam;
        RankCertificate c = injectivity_certificate(m, n, copts);
        std::string name = std::string(cert_map_name(m)) + " n=" + std::to_string(n);
        if (m == CertMap::MagToDend) name += " λ=" + lam.to_string();
        std::size_t want = expected_rank(m, n);
        r.add(name, c.injective && c.rank == want,
              "rank " + std::to_string(c.rank) + " of " + std::to_string(c.rows) + "x" + std::to_string(c.cols) +
                  ", expected " + std::to_string(want));
      }
    }
  return r;
}

bool display_matches(const DisplayCase& d, std::string& got) {
  if (d.op == "prelie" || d.op == "nap" || d.op == "nap-sharp") {
    auto star = d.input.find(" * ");
    TreeComb x = one(parse_rooted(d.input.substr(0, star)));
    TreeComb y = one(parse_rooted(d.input.substr(star + 3)));
    TreeComb v = d.op == "prelie" ? prelie_product(x, y) : d.op == "nap" ? nap_product(x, y) : sharp(TreeProduct::Nap, x, y);
    got = format_lincomb(v);
  } else if (d.op == "normalize") {
    got = to_string(normalize_commag(parse_binary(d.input)));
  } else if (d.op == "enumerate-commag") {
    std::vector<std::string> terms;
    for (const auto& t : enumerate_commag(std::stoi(d.input))) terms.push_back(to_string(t));
    std::sort(terms.begin(), terms.end());
    got.clear();
    for (const auto& t : terms) got += (got.empty() ? "" : ", ") + t;
  } else if (d.op == "psi") {
    got = to_string(psi(parse_binary(d.input)));
  } else if (d.op == "d") {
    got = std::to_string(*type_a_certificate(parse_rooted(d.input)).d);
  } else if (d.op == "phi-tilde") {
    got = format_lincomb(phi_tilde(parse_binary(d.input)));
  } else if (d.op == "color") {
    got = to_string(color_edges(parse_rooted(d.input)));
  } else if (d.op == "decompose") {
    Decomposition dec = decompose(parse_rooted(d.input));
    json j = to_json(dec);
    std::string comps;
    for (const auto& c : dec.components) comps += (comps.empty() ? "" : ",") + to_string(c);
    got = "blocks=" + j["blocks"].dump() + " components=[" + comps + "] skeleton=" + to_string(dec.skeleton);
  } else {
    throw Error("unknown display op " + d.op);
  }
  return got == d.expected;
}

CheckReport roundtrip(const CheckOptions& o) {
  CheckReport r{"roundtrip", {}};
  // Ψ is cheap, so its sweep defaults to n = 7 without --big.
  const int n_max = o.n ? resolve_n(o, *o.n) : 7;
  const int scan_max = std::min(n_max, limit_n(o.bounds, o.big));

  for (int n = 1; n <= n_max; ++n) {
    auto commag = enumerate_commag(n);
    std::size_t bad = 0;
    std::set<RootedTree> image;
    for (const auto& t : commag) {
      RootedTree p = psi(t);
      image.insert(p);
      if (!(psi_inverse(p) == t)) ++bad;
    }
    auto trees = enumerate_rooted_trees(n, o.jobs);
    std::set<RootedTree> type_a;
    std::size_t bad_back = 0;
    for (const auto& t : trees)
      if (is_type_a(t)) {
        type_a.insert(t);
        if (!(psi(psi_inverse(t)) == t)) ++bad_back;
      }
    const std::size_t want = double_factorial(2 * n - 3);
    r.add("Ψ round trip n=" + std::to_string(n), bad == 0 && bad_back == 0,
          std::to_string(commag.size()) + " terms, " + std::to_string(bad + bad_back) + " failures");
    r.add("type-A trees n=" + std::to_string(n) + " = image of Ψ, count (2n-3)!!",
          type_a == image && type_a.size() == want,
          std::to_string(type_a.size()) + " type-A, " + std::to_string(image.size()) + " in image, expected " +
              std::to_string(want));
  }

  for (int n = 1; n <= scan_max; ++n) {
    std::size_t bad = 0;
    for (const auto& t : enumerate_commag(n)) {
      Rational c = phi_tilde(t).coeff(psi(t));
      if (!(c.is_integer() && c.sign() > 0)) ++bad;
    }
    r.add("Ψ(t) in the support of Φ̃(t) with positive integer coefficient, n=" + std::to_string(n), bad == 0,
          std::to_string(bad) + " failures");
  }

  std::size_t bad_decomp = 0, total = 0;
  for (int n = 1; n <= scan_max; ++n) {
    auto trees = enumerate_rooted_trees(n, o.jobs);
    total += trees.size();
    auto bad = parallel_map(trees.size(), o.jobs, [&](std::size_t i) {
      return reconstruct(decompose(trees[i])) == trees[i] ? 0 : 1;
    });
    for (int b : bad) bad_decomp += static_cast<std::size_t>(b);
  }
  r.add("reconstruct(decompose(T)) = T for n <= " + std::to_string(scan_max), bad_decomp == 0,
        std::to_string(total) + " trees, " + std::to_string(bad_decomp) + " failures");

  std::size_t bad_parse = 0;
  for (int n = 1; n <= std::min(scan_max, 5); ++n) {
    for (const auto& t : enumerate_rooted_trees(n))
      if (!(parse_rooted(to_string(t)) == t)) ++bad_parse;
    for (const auto& t : enumerate_mag(n))
      if (!(parse_binary(to_string(t)) == t)) ++bad_parse;
  }
  for (int k = 1; k <= 8; ++k)
    for (const auto& t : enumerate_pbt(k, k <= 5 ? 2 : 1))
      if (!(parse_pbt(to_string(t)) == t)) ++bad_parse;
  r.add("parse(format(x)) = x for enumerated terms", bad_parse == 0, std::to_string(bad_parse) + " failures");

  for (const auto& d : golden_displays()) {
    if (d.op == "color" || d.op == "decompose") continue;
    std::string got;
    bool ok = display_matches(d, got);
    r.add("display " + d.op + " " + d.input, ok, ok ? "" : "got " + got + ", expected " + d.expected);
  }
  return r;
}

CheckReport redblack_golden(const CheckOptions& o) {
  CheckReport r{"redblack-golden", {}};
  const int n_max = resolve_n(o, o.bounds.max_n);

  std::size_t mismatches = 0;
  std::string first;
  for (const auto& c : golden_colorings()) {
    ColoredTree got = color_edges(parse_rooted(c.tree));
    std::set<Edge> want(c.red.begin(), c.red.end());
    if (got.red_edges != want) {
      ++mismatches;
      if (first.empty()) first = to_string(got);
    }
  }
  r.add("n=4 reference colorings", mismatches == 0,
        std::to_string(golden_colorings().size()) + " trees, " + std::to_string(mismatches) + " mismatches" +
            (first.empty() ? "" : "; e.g. " + first));

  for (const auto& d : golden_displays()) {
    if (d.op != "color" && d.op != "decompose") continue;
    std::string got;
    bool ok = display_matches(d, got);
    r.add("display " + d.op + " " + d.input, ok, ok ? "" : "got " + got + ", expected " + d.expected);
  }

  const auto reference = reference_x_dims();
  for (int n = 1; n <= n_max; ++n) {
    auto trees = enumerate_rooted_trees(n, o.jobs);
    auto flags = parallel_map(trees.size(), o.jobs, [&](std::size_t i) {
      const RootedTree& t = trees[i];
      bool x = is_x_tree(t);
      bool all_red = color_edges(t).red_edges.size() == t.size() - 1;
      return std::pair<int, int>(x ? 1 : 0, x == all_red ? 0 : 1);
    });
    std::size_t count = 0, disagree = 0;
    for (const auto& [x, d] : flags) {
      count += static_cast<std::size_t>(x);
      disagree += static_cast<std::size_t>(d);
    }
    r.add("is_x_tree <=> all edges red, n=" + std::to_string(n), disagree == 0,
          std::to_string(trees.size()) + " trees, " + std::to_string(disagree) + " disagreements");
    if (static_cast<std::size_t>(n) <= reference.size())
      r.add("X-tree count n=" + std::to_string(n), static_cast<long long>(count) == reference[static_cast<std::size_t>(n - 1)],
            std::to_string(count) + ", expected " + std::to_string(reference[static_cast<std::size_t>(n - 1)]));
  }
  return r;
}

CheckReport jordan(const CheckOptions&) {
  CheckReport r{"jordan", {}};
  auto s = [](const WordComb& a, const WordComb& b) { return assoc_sym(a, b); };

  // Arity 3: (x·y)·z, (x·z)·y, (y·z)·x in the basis of multilinear words.
  WordComb x = word("x"), y = word("y"), z = word("z");
  std::vector<WordComb> ops = {s(s(x, y), z), s(s(x, z), y), s(s(y, z), x)};
  std::vector<std::string> words = {"xyz", "xzy", "yxz", "yzx", "zxy", "zyx"};
  RationalMatrix m(ops.size(), words.size());
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) m.set(i, j, ops[i].coeff(Word(words[j])));
  std::size_t rk = rank(m);
  r.add("arity-3 operations independent", rk == 3, "rank " + std::to_string(rk) + " of 3x6");

  WordComb t = word("t");
  WordComb identity = s(s(x, y), s(t, z)) + s(s(x, z), s(t, y)) + s(s(y, z), s(t, x)) - s(s(s(x, y), t), z) -
                      s(s(s(x, z), t), y) - s(s(s(y, z), t), x);
  r.add("arity-4 identity", identity.is_zero(), identity.is_zero() ? "" : format_lincomb(identity));

  WordComb a = word("a"), b = word("b");
  WordComb a2 = s(a, a);
  WordComb rel = s(a2, s(b, a)) - s(s(a2, b), a);
  r.add("(a·a)·(b·a) = ((a·a)·b)·a", rel.is_zero(), rel.is_zero() ? "" : format_lincomb(rel));
  return r;
}

DendComb brace_side(const BinaryTerm& t) {
  if (t.is_leaf()) return one(PlanarBinaryTree::generator());
  DendComb u = brace_side(t.left()), v = brace_side(t.right());
  return dend_brace(u, v) + dend_brace(v, u);
}

CheckReport lemma_square(const CheckOptions& o) {
  CheckReport r{"lemma-square", {}};
  const int leaves = resolve_degree(o, o.bounds.square_leaves, 8);

  auto pairs = pbt_pairs(leaves);
  std::size_t bad = 0;
  for (const auto& [p, q] : pairs) {
    DendComb x = one(p), y = one(q);
    if (!(dend_square(x, y) + dend_square(y, x) == dend_brace(x, y) + dend_brace(y, x))) ++bad;
  }
  r.add("x□y + y□x = {x,y} + {y,x}", bad == 0,
        sizes_note(pairs.size(), "pairs, <= " + std::to_string(leaves) + " leaves") + ", " + std::to_string(bad) +
            " failures");

  auto triples = pbt_triples(leaves);
  auto fails = parallel_map(triples.size(), o.jobs, [&](std::size_t i) {
    const auto& [p, q, w] = triples[i];
    DendComb x = one(p), y = one(q), z = one(w);
    DendComb lhs = dend_brace(dend_brace(x, y), z) - dend_brace(x, dend_brace(y, z));
    DendComb rhs = dend_brace(dend_brace(x, z), y) - dend_brace(x, dend_brace(z, y));
    return at_lambda(lhs - rhs, Rational(1)).is_zero() ? 0 : 1;
  });
  std::size_t bad3 = 0;
  for (int f : fails) bad3 += static_cast<std::size_t>(f);
  r.add("{,} right-symmetric associator at λ = 1", bad3 == 0,
        sizes_note(triples.size(), "triples") + ", " + std::to_string(bad3) + " failures");

  std::size_t bad_sq = 0, terms = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_commag(n)) {
      ++terms;
      DendComb lhs;
      for (const auto& [m, c] : commag_to_mag(t)) lhs += mag_to_dend(m) * LambdaPoly(c);
      if (!(lhs == brace_side(t))) ++bad_sq;
    }
  r.add("square commutes on ComMag terms with <= 4 leaves", bad_sq == 0,
        std::to_string(terms) + " terms, " + std::to_string(bad_sq) + " failures");
  return r;
}

std::string join(const std::vector<Rational>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out + "]";
}

CheckReport series(const CheckOptions& o) {
  CheckReport r{"series", {}};
  const int order = o.order.value_or(7);
  if (order > o.bounds.max_order)
    throw ResourceError("order " + std::to_string(order) + " exceeds the bound " + std::to_string(o.bounds.max_order));
  if (order < 1) throw Error("order must be positive");

  DimSeries x = x_dims(order);
  auto px = reference_x_dims();
  bool x_ok = true;
  for (std::size_t i = 0; i < px.size() && i < x.dims.size(); ++i) x_ok = x_ok && x.dims[i] == Rational(px[i]);
  r.add("x dims", x_ok && x.all_integral(), join(x.dims));

  DimSeries y = y_dims(std::max(order, 5));
  auto py = reference_y_dims();
  bool y_ok = true;
  for (std::size_t i = 0; i < py.size(); ++i) y_ok = y_ok && y.dims[i] == Rational(py[i]);
  r.add("y dims", y_ok && y.all_integral(), join(std::vector<Rational>(y.dims.begin(), y.dims.begin() + std::max(order, 5))));

  const int scan = std::min(order, limit_n(o.bounds, o.big));
  bool agree = true;
  std::string counts;
  for (int n = 1; n <= scan; ++n) {
    std::size_t c = count_x_trees(n, o.jobs);
    counts += (n > 1 ? "," : "") + std::to_string(c);
    agree = agree && x.dims[static_cast<std::size_t>(n - 1)] == Rational(static_cast<long long>(c));
  }
  r.add("x dims = X-tree counts for n <= " + std::to_string(scan), agree, "[" + counts + "]");

  r.add("f_As o f_Mag = Catalan series to order 12", dup_split_check(12));
  r.add("perturbed f_Mag breaks it (negative control)", !dup_split_check(12, true));

  const int zo = std::max(order, 8);
  DimSeries z = z_dims(zo);
  r.add("z dims nonnegative integers to order " + std::to_string(zo), z.all_integral() && z.all_nonnegative(), join(z.dims));

  PowerSeries cm = f_commag(o.bounds.max_order);
  r.add("reverse(f_ComMag) is a two-sided inverse",
        ps_compose(ps_reverse(cm), cm) == PowerSeries::identity(SeriesKind::EGS, cm.order()) &&
            ps_compose(cm, ps_reverse(cm)) == PowerSeries::identity(SeriesKind::EGS, cm.order()));

  ClosedFormReport cf = y_closed_form_report(std::max(order, 5));
  r.note("1/(1-3t-t^3) against y dims",
         "coefficients " + join(cf.closed_form) + "; OGS reading " +
             (cf.matches_ogs ? "matches" : "differs from arity " + std::to_string(cf.first_mismatch_ogs)) +
             "; EGS reading " +
             (cf.matches_egs ? "matches" : "differs from arity " + std::to_string(cf.first_mismatch_egs)));
  return r;
}

}  // namespace

std::vector<std::array<RootedTree, 3>> rooted_triples(int max_labels) { return rooted_tuples<3>(max_labels); }
std::vector<std::array<RootedTree, 2>> rooted_pairs(int max_labels) { return rooted_tuples<2>(max_labels); }
std::vector<std::array<PlanarBinaryTree, 3>> pbt_triples(int max_leaves) { return pbt_tuples<3>(max_leaves); }
std::vector<std::array<PlanarBinaryTree, 2>> pbt_pairs(int max_leaves) { return pbt_tuples<2>(max_leaves); }

DendRelationSummary dend_relation_summary(int max_leaves, unsigned jobs) {
  auto triples = pbt_triples(max_leaves);
  struct Row {
    std::array<DendComb, 3> residual;
    bool duplicial_ok;
  };
  const LambdaPoly lam = LambdaPoly::lambda();
  auto rows = parallel_map(triples.size(), jobs, [&](std::size_t i) {
    const auto& [p, q, w] = triples[i];
    DendComb x = one(p), y = one(q), z = one(w);
    DendComb xly = dend_left(x, y), xry = dend_right(x, y);
    Row row;
    row.residual[0] = dend_left(xly, z) - dend_left(x, dend_left(y, z)) - dend_left(x, dend_right(y, z)) * lam;
    row.residual[1] = dend_left(xry, z) - dend_right(x, dend_left(y, z));
    row.residual[2] = dend_right(xly, z) * lam + dend_right(xry, z) - dend_right(x, dend_right(y, z));
    DendComb a1 = dend_left(xly, z) - dend_left(x, dend_left(y, z));
    DendComb a2 = dend_right(xry, z) - dend_right(x, dend_right(y, z));
    row.duplicial_ok = at_lambda(a1, Rational(0)).is_zero() && at_lambda(a2, Rational(0)).is_zero();
    return row;
  });
  DendRelationSummary s;
  s.triples = triples.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      const DendComb& res = rows[i].residual[k];
      if (res.is_zero()) continue;
      ++s.nonzero[k];
      if (s.example[k].empty()) {
        const auto& [p, q, w] = triples[i];
        s.example[k] = "x=" + to_string(p) + " y=" + to_string(q) + " z=" + to_string(w) + ": " + format_lincomb(res);
      }
      if (!at_lambda(res, Rational(0)).is_zero()) ++s.nonzero_at_zero[k];
      if (!at_lambda(res, Rational(1)).is_zero()) ++s.nonzero_at_one[k];
      if (!at_lambda(res, Rational(-1)).is_zero()) ++s.nonzero_at_minus_one[k];
    }
    if (!rows[i].duplicial_ok) ++s.duplicial_failures;
  }
  return s;
}

CheckReport run_check(std::string_view suite, const CheckOptions& opts) {
  if (suite == "prelie-identity") return prelie_identity(opts);
  if (suite == "nap-identity") return nap_identity(opts);
  if (suite == "dend-relations") return dend_relations(opts);
  if (suite == "phi-recursion") return phi_recursion_suite(opts);
  if (suite == "injectivity") return injectivity(opts);
  if (suite == "roundtrip") return roundtrip(opts);
  if (suite == "redblack-golden") return redblack_golden(opts);
  if (suite == "jordan") return jordan(opts);
  if (suite == "lemma-square") return lemma_square(opts);
  if (suite == "series") return series(opts);
  if (suite == "filtration") return filtration(opts);
  throw Error("unknown suite \"" + std::string(suite) + "\"");
}

}  // namespace opf
