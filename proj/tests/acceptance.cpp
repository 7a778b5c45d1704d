// One line per acceptance criterion; exits nonzero if any fails.

#include <cstdio>
#include <string>
#include <vector>

#include "strata/strata_kit.hpp"

namespace {

using namespace strata;

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> prefixes;
};

Summary collect(const Report& r, const std::vector<std::string>& prefixes) {
  Summary s;
  for (const auto& p : prefixes) {
    const Summary t = r.summary_for(p);
    s.pass += t.pass;
    s.fail += t.fail;
    s.inconclusive += t.inconclusive;
  }
  return s;
}

std::string first_problem(const Report& r, const std::vector<std::string>& prefixes) {
  for (const auto& c : r.checks()) {
    if (c.status == Status::Pass) continue;
    for (const auto& p : prefixes)
      if (c.id.rfind(p, 0) == 0) return c.id + ": " + c.witness;
  }
  return "";
}

}  // namespace

int main() {
  const SuiteOptions opts;
  const Report full = run_suite("all", opts);
  SuiteOptions qopts;
  qopts.quotient = HPrimeId::parse("132-132");
  const Report quot = run_suite("all", qopts);

  const std::vector<Criterion> criteria = {
      {1, "relations battery", {"relations.antisymmetry", "relations.jacobi", "relations.leibniz", "relations.confluence"}},
      {2, "semiclassical consistency", {"relations.semiclassical."}},
      {3, "centrality of D and D_q", {"relations.centrality."}},
      {4, "H-prime battery", {"hprimes."}},
      {5, "poset", {"poset."}},
      {6, "Ore sets", {"ore."}},
      {7, "centre table", {"centers."}},
      {8, "primitive table", {"primitives."}},
      {9, "case analysis", {"cases."}},
      {10, "maps", {"maps."}},
  };

  bool ok = true;
  auto line = [&](int n, const std::string& title, const Report& r, const std::vector<std::string>& prefixes) {
    const Summary s = collect(r, prefixes);
    const bool pass = s.total() > 0 && s.ok();
    ok = ok && pass;
    std::printf("criterion %2d %-28s %s  (%d pass, %d fail, %d inconclusive)%s%s\n", n, title.c_str(),
                pass ? "PASS" : "FAIL", s.pass, s.fail, s.inconclusive, pass ? "" : "  ",
                pass ? "" : first_problem(r, prefixes).c_str());
  };
  for (const auto& c : criteria) line(c.number, c.title, full, c.prefixes);
  line(11, "GL2 quotient (4-10)", quot, {"hprimes.", "poset.", "ore.", "centers.", "primitives.", "cases.", "maps."});
  return ok ? 0 : 1;
}
