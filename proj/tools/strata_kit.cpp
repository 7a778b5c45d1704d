// strata-kit: verification driver.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strata/strata_kit.hpp"

namespace {

using namespace strata;

int do_run(const std::string& suite, const std::vector<std::string>& pair, const std::string& lambda,
           std::uint64_t seed, const std::string& quotient, const std::string& json_out, bool timing, bool quiet) {
  SuiteOptions o;
  o.seed = seed;
  o.timing = timing;
  if (!pair.empty()) {
    const HPrimeId J = HPrimeId::parse(pair[0]), K = HPrimeId::parse(pair[1]);
    if (!contained(J, K)) throw Error(J.to_string() + " is not contained in " + K.to_string());
    o.pair = std::make_pair(J, K);
  }
  if (!lambda.empty()) o.lambda = parse_lambda(lambda);
  if (!quotient.empty()) o.quotient = HPrimeId::parse(quotient);

  const Report r = run_suite(suite, o);
  if (!quiet) {
    for (const auto& c : r.checks()) {
      std::cout << status_name(c.status) << "  " << c.id;
      if (!c.witness.empty()) std::cout << "  " << c.witness;
      if (timing) std::cout << "  [" << c.ms << " ms]";
      std::cout << "\n";
    }
  }
  const Summary& s = r.summary();
  std::cout << "suite " << suite << " seed " << r.seed() << ": " << s.pass << " pass, " << s.fail << " fail, "
            << s.inconclusive << " inconclusive\n";
  if (!json_out.empty()) {
    std::ofstream f(json_out);
    if (!f) throw Error("cannot write " + json_out);
    f << r.to_json().dump(2) << "\n";
  }
  return r.ok() ? 0 : 1;
}

int do_eval(const std::string& text, const std::string& side, const std::string& mod) {
  const Ambient amb = sl3();
  const ExprAst a = parse_expr(text, amb);
  std::optional<HPrimeId> J;
  if (!mod.empty()) J = HPrimeId::parse(mod);
  if (side == "q") {
    NCPoly v = eval_quantum(a, amb);
    if (J) v = quantum_reducer(*J).reduce(v);
    std::cout << to_string(v, amb) << "\n";
    return 0;
  }
  LambdaPoly v = eval_poisson<ParamRational>(a, amb);
  if (J) {
    std::vector<LambdaPoly> G;
    for (const auto& g : ideal_gb(*J).gens) G.push_back(to_lambda(g));
    v = reduce(v, G);
  }
  std::cout << to_string(v, amb) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification driver for the Poisson and quantum SL3 strata data"};
  app.require_subcommand(1);

  std::string suite, lambda, quotient, json_out;
  std::vector<std::string> pair;
  std::uint64_t seed = strata::kDefaultSeed;
  bool timing = false, quiet = false;
  auto* run = app.add_subcommand("run", "run a verification suite");
  run->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(strata::suite_names()));
  run->add_option("--pair", pair, "restrict to one comparable pair J K")->expected(2);
  run->add_option("--lambda", lambda, "comma-separated nonzero parameters, e.g. 2,3");
  run->add_option("--seed", seed, "seed for randomized checks");
  run->add_option("--quotient", quotient, "restrict to H-primes containing this one, e.g. 132-132");
  run->add_option("--json", json_out, "write the JSON report to this file");
  run->add_flag("--timing", timing, "record per-check wall time");
  run->add_flag("--quiet", quiet, "print only the summary line");

  std::string expr, side = "p", mod;
  auto* ev = app.add_subcommand("eval", "print the normal form of an expression");
  ev->add_option("expr", expr, "expression")->required();
  ev->add_option("--side", side, "q (quantum) or p (Poisson)")->check(CLI::IsMember({"q", "p"}));
  ev->add_option("--mod", mod, "reduce modulo this H-prime");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return do_run(suite, pair, lambda, seed, quotient, json_out, timing, quiet);
    return do_eval(expr, side, mod);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
