#pragma once

// Check records and reports, with JSON output.

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "strata/error.hpp"

namespace strata {

enum class Status { Pass, Fail, Inconclusive };

inline std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "fail";
}

struct CheckRecord {
  std::string id;
  Status status = Status::Fail;
  std::string witness;
  long ms = 0;
};

struct Outcome {
  Status status = Status::Pass;
  std::string witness;

  static Outcome pass(std::string w = "") { return {Status::Pass, std::move(w)}; }
  static Outcome fail(std::string w) { return {Status::Fail, std::move(w)}; }
  static Outcome inconclusive(std::string w) { return {Status::Inconclusive, std::move(w)}; }
  static Outcome of(bool ok, std::string w) { return {ok ? Status::Pass : Status::Fail, std::move(w)}; }
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int inconclusive = 0;
  int total() const { return pass + fail + inconclusive; }
  bool ok() const { return fail == 0 && inconclusive == 0; }
};

class Report {
 public:
  Report(std::string suite, std::uint64_t seed, bool timing = false)
      : suite_(std::move(suite)), seed_(seed), timing_(timing) {}

  /// Run one check. Exceptions become failures; `quantum` marks checks whose
  /// certificates come from one-sided reduction, where an unproven identity
  /// is inconclusive rather than false.
  void check(const std::string& id, const std::function<Outcome()>& body, bool quantum = false) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const CaseUnverified& e) {
      o = quantum ? Outcome::inconclusive(e.what()) : Outcome::fail(e.what());
    } catch (const NotQCommuting& e) {
      o = quantum ? Outcome::inconclusive(e.what()) : Outcome::fail(e.what());
    } catch (const std::exception& e) {
      o = Outcome::fail(e.what());
    }
    if (o.status == Status::Inconclusive && !quantum) o.status = Status::Fail;
    const auto t1 = std::chrono::steady_clock::now();
    const long ms =
        timing_ ? static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()) : 0;
    add({id, o.status, o.witness, ms});
  }

  void add(CheckRecord r) {
    switch (r.status) {
      case Status::Pass:
        ++summary_.pass;
        break;
      case Status::Fail:
        ++summary_.fail;
        break;
      case Status::Inconclusive:
        ++summary_.inconclusive;
        break;
    }
    checks_.push_back(std::move(r));
  }

  void merge(const Report& o) {
    for (const auto& c : o.checks_) add(c);
  }

  const std::string& suite() const { return suite_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<CheckRecord>& checks() const { return checks_; }
  const Summary& summary() const { return summary_; }
  bool ok() const { return summary_.ok(); }

  /// Checks whose id starts with `prefix`.
  Summary summary_for(const std::string& prefix) const {
    Summary s;
    for (const auto& c : checks_) {
      if (c.id.rfind(prefix, 0) != 0) continue;
      if (c.status == Status::Pass) ++s.pass;
      else if (c.status == Status::Fail) ++s.fail;
      else ++s.inconclusive;
    }
    return s;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite_;
    j["seed"] = seed_;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_)
      j["checks"].push_back({{"id", c.id}, {"status", status_name(c.status)}, {"witness", c.witness}, {"ms", c.ms}});
    j["summary"] = {{"pass", summary_.pass}, {"fail", summary_.fail}, {"inconclusive", summary_.inconclusive}};
    return j;
  }

 private:
  std::string suite_;
  std::uint64_t seed_ = 0;
  bool timing_ = false;
  std::vector<CheckRecord> checks_;
  Summary summary_;
};

}  // namespace strata
