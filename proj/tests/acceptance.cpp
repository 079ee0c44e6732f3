// Acceptance run: one PASS/FAIL line per criterion, detail lines for failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "opf/checks.hpp"
#include "opf/enumerate.hpp"
#include "opf/error.hpp"

using namespace opf;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> details;
  std::vector<std::string> notes;
};

void absorb(Outcome& o, const CheckReport& r, const std::function<bool(const Assertion&)>& keep = {}) {
  for (const auto& a : r.assertions) {
    if (keep && !keep(a)) continue;
    if (a.informational) {
      o.notes.push_back(r.suite + ": " + a.name + " -- " + a.detail);
      continue;
    }
    if (!a.passed) {
      o.passed = false;
      o.details.push_back(r.suite + ": " + a.name + (a.detail.empty() ? "" : " -- " + a.detail));
    }
  }
}

Outcome suites(std::initializer_list<const char*> names, CheckOptions opts = {}) {
  Outcome o;
  for (const char* s : names) absorb(o, run_check(s, opts));
  return o;
}

Outcome enumeration_counts() {
  Outcome o;
  auto expect = [&](const std::string& what, std::uint64_t got, std::uint64_t want) {
    if (got != want) {
      o.passed = false;
      o.details.push_back(what + ": " + std::to_string(got) + ", expected " + std::to_string(want));
    }
  };
  for (int n = 1; n <= 7; ++n)
    expect("rooted trees n=" + std::to_string(n), enumerate_rooted_trees(n).size(), int_pow(n, n - 1));
  for (int n = 1; n <= 8; ++n)
    expect("ComMag terms n=" + std::to_string(n), enumerate_commag(n).size(), double_factorial(2 * n - 3));
  for (int k = 2; k <= 10; ++k)
    expect("planar binary trees k=" + std::to_string(k), enumerate_pbt(k).size(), catalan(k - 1));
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  CheckOptions series_opts;
  series_opts.big = true;  // count_x_trees(7) for the x-dims comparison
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"enumeration counts", enumeration_counts},
      {"identity suites", [] { return suites({"prelie-identity", "nap-identity", "dend-relations"}); }},
      {"phi recursion", [] { return suites({"phi-recursion"}); }},
      {"injectivity certificates n<=6", [] { return suites({"injectivity"}); }},
      {"type-A structure",
       [] {
         Outcome o;
         absorb(o, run_check("roundtrip", {}), [](const Assertion& a) {
           return a.name.rfind("Ψ", 0) == 0 || a.name.rfind("type-A", 0) == 0 ||
                  a.name.rfind("display phi-tilde", 0) == 0;
         });
         return o;
       }},
      {"filtration", [] { return suites({"filtration"}); }},
      {"red/black decomposition",
       [] {
         Outcome o;
         absorb(o, run_check("redblack-golden", {}));
         absorb(o, run_check("roundtrip", {}),
                [](const Assertion& a) { return a.name.rfind("reconstruct", 0) == 0; });
         return o;
       }},
      {"series", [series_opts] { return suites({"series"}, series_opts); }},
      {"jordan", [] { return suites({"jordan"}); }},
      {"lemma square", [] { return suites({"lemma-square"}); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.details.push_back(std::string("error: ") + e.what());
    }
    double secs = std::chrono::duration<double>(clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << timing << ")\n";
    for (const auto& d : o.details) std::cout << "    " << d << '\n';
    for (const auto& n : o.notes) std::cout << "    info " << n << '\n';
    failed += o.passed ? 0 : 1;
  }
  std::cout << (failed ? "FAIL" : "PASS") << " acceptance: " << criteria.size() - failed << "/" << criteria.size()
            << " criteria\n";
  return failed ? 1 : 0;
}
