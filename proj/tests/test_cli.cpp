#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

std::string bin() {
  const char* b = std::getenv("STRATA_KIT_BIN");
  return b ? b : "strata-kit";
}

Result run(const std::string& args) {
  Result r;
  const std::string cmd = "'" + bin() + "' " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, p)) r.out += buf;
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string tmp(const std::string& name) { return ::testing::TempDir() + name; }

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST(Eval, Examples) {
  EXPECT_EQ(run("eval 'X33*X22' --side q").out, "X22*X33 - (q - q^-1)*X23*X32\n");
  EXPECT_EQ(run("eval '{Y11, Y22}' --side p").out, "2*Y12*Y21\n");
  EXPECT_EQ(run("eval '[23|23]' --side q").out, "X22*X33 - q*X23*X32\n");
  EXPECT_EQ(run("eval '{Y23, Y32}' --side p --mod 132-132").out, "0\n");
  EXPECT_EQ(run("eval 'Y11*[23|23]' --mod 132-132").out, "1\n");
  EXPECT_EQ(run("eval 'X31*X11' --side q --mod 123-123").out, "0\n");
}

TEST(Eval, ErrorsCarryPositions) {
  const Result r = run("eval 'Y11 * ?' --side p");
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.out.find("position 6"), std::string::npos) << r.out;
  EXPECT_NE(run("eval '[21|23]' --side p").code, 0);
  EXPECT_NE(run("eval 'Y11' --side z").code, 0);
}

TEST(Run, PosetReport) {
  const std::string path = tmp("poset.json");
  const Result r = run("run poset --json " + path);
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = read_json(path);
  EXPECT_EQ(j["suite"], "poset");
  EXPECT_TRUE(j["seed"].is_number_unsigned());
  ASSERT_TRUE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("id") && c.contains("status") && c.contains("witness") && c.contains("ms"));
    EXPECT_EQ(c["status"], "pass");
  }
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_EQ(j["summary"]["inconclusive"], 0);
  EXPECT_EQ(j["summary"]["pass"], j["checks"].size());
  EXPECT_NE(r.out.find("poset.above.(231,231)"), std::string::npos);
}

TEST(Run, Reproducible) {
  const std::string a = tmp("rel_a.json"), b = tmp("rel_b.json");
  ASSERT_EQ(run("run relations --seed 7 --json " + a).code, 0);
  ASSERT_EQ(run("run relations --seed 7 --json " + b).code, 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(read_json(a)["seed"], 7);
}

TEST(Run, PairAndLambda) {
  const Result r = run("run maps --pair 132,132 123,123 --lambda 2,3");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("{Y11 = 2}"), std::string::npos) << r.out;
  const Result p = run("run psi --pair 123,123 123,123 --lambda 2,3");
  EXPECT_EQ(p.code, 0) << p.out;
  EXPECT_NE(p.out.find("X11 - 2, X22 - 3"), std::string::npos) << p.out;
  EXPECT_NE(run("run psi --pair 123,123 123,123 --lambda 2").code, 0);
  EXPECT_NE(run("run maps --pair 123,123 321,321").code, 0);
  EXPECT_NE(run("run psi --lambda 0,1").code, 0);
}

TEST(Run, Quotient) {
  const Result r = run("run all --quotient 132-132 --quiet");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("0 fail, 0 inconclusive"), std::string::npos);
}

TEST(Run, UnknownSuite) {
  EXPECT_NE(run("run nonsense").code, 0);
  EXPECT_NE(run("").code, 0);
}
