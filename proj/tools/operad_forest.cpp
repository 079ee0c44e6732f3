// operad_forest: exact computations in free pre-Lie, NAP, ComMag, Mag,
// λ-dendriform and associative algebras.
//
// Exit status: 0 when every check passes, 1 when a mathematical assertion
// fails, 2 on usage or resource errors.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <new>
#include <optional>
#include <string>

#include "opf/assoc.hpp"
#include "opf/certificate.hpp"
#include "opf/checks.hpp"
#include "opf/config.hpp"
#include "opf/dendriform.hpp"
#include "opf/enumerate.hpp"
#include "opf/error.hpp"
#include "opf/fixtures.hpp"
#include "opf/json_io.hpp"
#include "opf/maps.hpp"
#include "opf/parse.hpp"
#include "opf/prelie.hpp"
#include "opf/redblack.hpp"
#include "opf/series.hpp"

namespace {

using namespace opf;

struct Global {
  bool json_out = false;
  unsigned jobs = 1;
  bool big = false;
  std::optional<std::string> config;
  std::optional<std::string> lambda;
};

void emit(const Global& g, const json& j, const std::string& text) {
  if (g.json_out)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

template <class B, class S>
void emit_comb(const Global& g, const LinComb<B, S>& x) {
  emit(g, to_json(x), format_lincomb(x) + "\n");
}

void emit_dend(const Global& g, const DendComb& x) {
  if (g.lambda)
    emit_comb(g, at_lambda(x, Rational::parse(*g.lambda)));
  else
    emit_comb(g, x);
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const Global& g, const std::string& kind, std::optional<int> n, std::optional<int> leaves,
                  int generators, bool count_only) {
  std::vector<std::string> items;
  if (kind == "pbt" || kind == "planar") {
    int k = leaves.value_or(n.value_or(0));
    if (k < 1) throw CLI::ValidationError("--leaves", "required for pbt and at least 1");
    if (k > 12) throw ResourceError("pbt enumeration limited to 12 leaves");
    for (const auto& t : enumerate_pbt(k, generators)) items.push_back(to_string(t));
  } else {
    if (!n) throw CLI::ValidationError("--n", "required");
    if (kind == "rooted") {
      Bounds b = load_bounds(g.config);
      if (*n > std::max(limit_n(b, g.big), 7)) throw ResourceError("rooted enumeration limited to n <= 7 here");
      for (const auto& t : enumerate_rooted_trees(*n, g.jobs)) items.push_back(to_string(t));
    } else if (kind == "commag") {
      for (const auto& t : enumerate_commag(*n)) items.push_back(to_string(t));
    } else if (kind == "mag") {
      for (const auto& t : enumerate_mag(*n)) items.push_back(to_string(t));
    } else if (kind == "mag-planar") {
      for (const auto& t : enumerate_mag_planar(*n)) items.push_back(to_string(t));
    } else {
      throw CLI::ValidationError("--kind", "expected rooted, commag, mag, mag-planar or pbt");
    }
  }
  json j;
  j["kind"] = kind;
  j["count"] = items.size();
  if (!count_only) j["items"] = items;
  std::string text;
  if (!count_only)
    for (const auto& s : items) text += s + "\n";
  text += "count " + std::to_string(items.size()) + "\n";
  emit(g, j, text);
  return 0;
}

// ---------------------------------------------------------------- product

int cmd_product(const Global& g, const std::string& op, const std::string& lhs, const std::string& rhs) {
  if (op == "prelie" || op == "nap" || op == "prelie-sharp" || op == "nap-sharp") {
    TreeComb x(parse_rooted(lhs)), y(parse_rooted(rhs));
    TreeComb r = op == "prelie"       ? prelie_product(x, y)
                 : op == "nap"        ? nap_product(x, y)
                 : op == "prelie-sharp" ? sharp(TreeProduct::PreLie, x, y)
                                      : sharp(TreeProduct::Nap, x, y);
    emit_comb(g, r);
  } else if (op == "dend-left" || op == "dend-right" || op == "dend-square" || op == "dend-brace") {
    DendComb x(parse_pbt(lhs), LambdaPoly(1)), y(parse_pbt(rhs), LambdaPoly(1));
    DendComb r = op == "dend-left"    ? dend_left(x, y)
                 : op == "dend-right" ? dend_right(x, y)
                 : op == "dend-square" ? dend_square(x, y)
                                      : dend_brace(x, y);
    emit_dend(g, r);
  } else if (op == "assoc" || op == "assoc-sym") {
    WordComb x(parse_word(lhs)), y(parse_word(rhs));
    emit_comb(g, op == "assoc" ? assoc_concat(x, y) : assoc_sym(x, y));
  } else {
    throw CLI::ValidationError("--op",
                               "expected prelie, nap, prelie-sharp, nap-sharp, dend-left, dend-right, dend-square, "
                               "dend-brace, assoc or assoc-sym");
  }
  return 0;
}

// ---------------------------------------------------------------- map

int cmd_map(const Global& g, const std::string& name, const std::string& term) {
  if (name == "normalize") {
    std::string s = to_string(normalize_commag(parse_binary(term)));
    emit(g, json(s), s + "\n");
  } else if (name == "psi") {
    std::string s = to_string(psi(parse_binary(term)));
    emit(g, json(s), s + "\n");
  } else if (name == "psi-inverse") {
    std::string s = to_string(psi_inverse(parse_rooted(term)));
    emit(g, json(s), s + "\n");
  } else if (name == "type-a") {
    RootedTree t = parse_rooted(term);
    json j;
    j["tree"] = to_string(t);
    j["type_a"] = is_type_a(t);
    std::string text = to_string(t) + (is_type_a(t) ? " in A[S]" : " not in A[S]");
    if (is_type_a(t)) {
      TypeACertificate c = type_a_certificate(t);
      if (c.root_is_max()) {
        j["factorization"] = "root-is-max";
        text += ", root is the maximum";
      } else {
        j["x1"] = to_string(*c.x1);
        j["x2"] = to_string(*c.x2);
        j["d"] = *c.d;
        text += ", " + to_string(*c.x1) + " ~* " + to_string(*c.x2) + ", d=" + std::to_string(*c.d);
      }
    }
    emit(g, j, text + "\n");
  } else if (name == "phi") {
    emit_comb(g, phi(parse_binary(term)));
  } else if (name == "phi-tilde") {
    emit_comb(g, phi_tilde(parse_binary(term)));
  } else if (name == "commag-to-mag") {
    emit_comb(g, commag_to_mag(parse_binary(term)));
  } else if (name == "mag-to-dend") {
    emit_dend(g, mag_to_dend(parse_binary(term)));
  } else if (name == "phi-recursion") {
    emit_dend(g, phi_recursion(parse_pbt(term)));
  } else if (name == "color") {
    ColoredTree c = color_edges(parse_rooted(term));
    json j;
    j["tree"] = to_string(c.tree);
    json red = json::array();
    for (const auto& [p, ch] : c.red_edges) red.push_back({p, ch});
    j["red"] = red;
    j["x_tree"] = is_x_tree(c.tree);
    emit(g, j, to_string(c) + "\n");
  } else {
    throw CLI::ValidationError("--name",
                               "expected normalize, psi, psi-inverse, type-a, phi, phi-tilde, commag-to-mag, "
                               "mag-to-dend, phi-recursion or color");
  }
  return 0;
}

// ---------------------------------------------------------------- decompose

std::string decomposition_text(const Decomposition& d) {
  std::string blocks, comps;
  for (const auto& b : d.blocks) {
    std::string s;
    for (Label l : b) s += (s.empty() ? "" : ",") + std::to_string(l);
    blocks += (blocks.empty() ? "{" : " {") + s + "}";
  }
  for (const auto& c : d.components) comps += (comps.empty() ? "" : " ") + to_string(c);
  return "blocks " + blocks + "\ncomponents " + comps + "\nskeleton " + to_string(d.skeleton) + "\n";
}

int cmd_decompose(const Global& g, const std::optional<std::string>& tree, std::optional<int> all, bool count_x) {
  if (tree && all) throw CLI::ValidationError("decompose", "give a tree or --all, not both");
  if (tree) {
    Decomposition d = decompose(parse_rooted(*tree));
    emit(g, to_json(d), decomposition_text(d));
    return 0;
  }
  if (!all) throw CLI::ValidationError("decompose", "give a tree or --all N");
  Bounds b = load_bounds(g.config);
  if (*all > limit_n(b, g.big))
    throw ResourceError("n = " + std::to_string(*all) + " exceeds the configured bound " +
                        std::to_string(limit_n(b, g.big)) + (g.big ? "" : " (use --big)"));
  if (count_x) {
    std::size_t c = count_x_trees(*all, g.jobs);
    json j;
    j["n"] = *all;
    j["x_trees"] = c;
    emit(g, j, std::to_string(c) + "\n");
    return 0;
  }
  json arr = json::array();
  std::string text;
  for (const auto& t : enumerate_rooted_trees(*all, g.jobs)) {
    Decomposition d = decompose(t);
    json j = to_json(d);
    j["tree"] = to_string(t);
    arr.push_back(j);
    text += to_string(color_edges(t)) + "  skeleton " + to_string(d.skeleton) + "\n";
  }
  emit(g, arr, text);
  return 0;
}

// ---------------------------------------------------------------- check

int cmd_check(const Global& g, const std::string& suite, std::optional<int> n, std::optional<int> order,
              std::optional<int> degree, const std::optional<std::string>& map) {
  CheckOptions o;
  o.n = n;
  o.order = order;
  o.degree = degree;
  if (map) o.map = parse_cert_map(*map);
  o.jobs = g.jobs;
  o.big = g.big;
  o.bounds = load_bounds(g.config);
  std::vector<std::string> suites = suite == "all" ? check_suites() : std::vector<std::string>{suite};
  json reports = json::array();
  std::string text;
  bool ok = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& s : suites) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport r = run_check(s, o);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json j = r.to_json();
    j["seconds"] = secs;
    reports.push_back(j);
    text += r.to_text();
    ok = ok && r.passed();
  }
  json out;
  out["command"] = "check " + suite;
  out["reports"] = reports;
  out["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out["verdict"] = ok ? "pass" : "fail";
  emit(g, out, text);
  return ok ? 0 : 1;
}

int cmd_certify(const Global& g, const std::string& map, int n, const std::optional<std::string>& lambda) {
  Bounds b = load_bounds(g.config);
  CertificateOptions o;
  o.jobs = g.jobs;
  o.max_n = limit_n(b, g.big);
  o.max_entries = static_cast<std::size_t>(b.max_matrix_entries) * 1'000'000;
  if (lambda) o.lambda = Rational::parse(*lambda);
  RankCertificate c = injectivity_certificate(parse_cert_map(map), n, o);
  std::string text = c.map + " n=" + std::to_string(c.n) + ": rank " + std::to_string(c.rank) + " of " +
                     std::to_string(c.rows) + "x" + std::to_string(c.cols) + ", source dimension " +
                     std::to_string(c.source_dim) + (c.injective ? ", injective\n" : ", NOT injective\n");
  emit(g, to_json(c), text);
  return c.injective ? 0 : 1;
}

// ---------------------------------------------------------------- series

int cmd_series(const Global& g, const std::string& target, int order) {
  Bounds b = load_bounds(g.config);
  if (order > b.max_order)
    throw ResourceError("order " + std::to_string(order) + " exceeds the bound " + std::to_string(b.max_order));
  if (target == "dup") {
    bool ok = dup_split_check(order);
    json j;
    j["order"] = order;
    j["holds"] = ok;
    emit(g, j, std::string("f_As o f_Mag = Catalan series to order ") + std::to_string(order) + ": " +
                   (ok ? "yes" : "no") + "\n");
    return ok ? 0 : 1;
  }
  if (target == "closed-form") {
    ClosedFormReport r = y_closed_form_report(order);
    json j;
    json cf = json::array(), y = json::array();
    for (const auto& c : r.closed_form) cf.push_back(c.to_string());
    for (const auto& c : r.y) y.push_back(c.to_string());
    j["closed_form"] = cf;
    j["y_dims"] = y;
    j["matches_ogs"] = r.matches_ogs;
    j["matches_egs"] = r.matches_egs;
    std::string text = "1/(1-3t-t^3):";
    for (const auto& c : r.closed_form) text += " " + c.to_string();
    text += "\ny dims:";
    for (const auto& c : r.y) text += " " + c.to_string();
    text += std::string("\nOGS reading: ") + (r.matches_ogs ? "matches" : "differs") +
            "\nEGS reading: " + (r.matches_egs ? "matches" : "differs") + "\n";
    emit(g, j, text);
    return 0;
  }
  DimSeries d = target == "x" ? x_dims(order) : target == "y" ? y_dims(order) : target == "z" ? z_dims(order)
                                                                                            : throw CLI::ValidationError(
                                                                                                  "--target",
                                                                                                  "expected x, y, z, dup or closed-form");
  emit(g, to_json(d), d.table());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in free operad algebras"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--json", g.json_out, "JSON output");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--big", g.big, "allow the larger n bound");
  app.add_option("--config", g.config, "bounds file (JSON)")->check(CLI::ExistingFile);

  std::string kind = "rooted";
  std::optional<int> en, leaves;
  int generators = 1;
  bool count_only = false;
  auto* e = app.add_subcommand("enumerate", "list a basis");
  e->add_option("--kind", kind, "rooted, commag, mag, mag-planar or pbt");
  e->add_option("--n", en, "number of labels");
  e->add_option("--leaves", leaves, "leaves of planar binary trees");
  e->add_option("--generators", generators, "generator labels on pbt nodes")->check(CLI::Range(1, 9));
  e->add_flag("--count-only", count_only);

  std::string op, lhs, rhs;
  auto* p = app.add_subcommand("product", "multiply two basis elements");
  p->add_option("--op", op)->required();
  p->add_option("lhs", lhs)->required();
  p->add_option("rhs", rhs)->required();
  p->add_option("--lambda", g.lambda, "specialise λ");

  std::string mname, mterm;
  auto* m = app.add_subcommand("map", "apply a map to a term");
  m->add_option("--name", mname)->required();
  m->add_option("term", mterm)->required();
  m->add_option("--lambda", g.lambda, "specialise λ");

  std::optional<std::string> dtree;
  std::optional<int> dall;
  bool count_x = false;
  auto* d = app.add_subcommand("decompose", "red/black decomposition");
  d->add_option("tree", dtree);
  d->add_option("--all", dall, "every tree on n labels");
  d->add_flag("--count-x", count_x, "count all-red trees");

  std::string suite;
  std::optional<int> cn, corder, cdegree;
  std::optional<std::string> cmap;
  auto* c = app.add_subcommand("check", "run a verification suite");
  std::vector<std::string> choices = check_suites();
  choices.push_back("all");
  c->add_option("suite", suite)->required()->check(CLI::IsMember(choices));
  c->add_option("--n", cn, "arity");
  c->add_option("--order", corder, "series order");
  c->add_option("--degree", cdegree, "total size bound for identity sweeps");
  c->add_option("--map", cmap, "phi, phi-tilde, commag-to-mag or mag-to-dend");

  std::string certmap;
  int certn = 0;
  std::optional<std::string> certlambda;
  auto* cert = app.add_subcommand("certify", "rank certificate for one map and arity");
  cert->add_option("--map", certmap)->required();
  cert->add_option("--n", certn)->required();
  cert->add_option("--lambda", certlambda, "λ for mag-to-dend");

  std::string target = "x";
  int order = 7;
  auto* s = app.add_subcommand("series", "dimension series");
  s->add_option("--target", target, "x, y, z, dup or closed-form");
  s->add_option("--order", order)->check(CLI::Range(1, 64));

  auto* f = app.add_subcommand("fixtures", "dump the golden corpus as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*e) return cmd_enumerate(g, kind, en, leaves, generators, count_only);
    if (*p) return cmd_product(g, op, lhs, rhs);
    if (*m) return cmd_map(g, mname, mterm);
    if (*d) return cmd_decompose(g, dtree, dall, count_x);
    if (*c) return cmd_check(g, suite, cn, corder, cdegree, cmap);
    if (*cert) return cmd_certify(g, certmap, certn, certlambda);
    if (*s) return cmd_series(g, target, order);
    if (*f) {
      std::cout << fixtures_json().dump(2) << '\n';
      return 0;
    }
  } catch (const CLI::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const ResourceError& err) {
    std::cerr << "refused: " << err.what() << '\n';
    return 2;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "refused: out of memory\n";
    return 2;
  }
  return 2;
}
