#pragma once

// The 36 H-primes of O(SL3): generators, Ore sets, Poisson centres and
// primitive-ideal generators, loaded from data/sl3_tables.json, plus the
// inclusion poset and the structural checks on the transcription.

#include <array>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "strata/expr.hpp"
#include "strata/poisson.hpp"
#include "strata/quantum.hpp"
#include "strata/skew.hpp"

#ifndef STRATA_KIT_DATA_DIR
#define STRATA_KIT_DATA_DIR "data"
#endif

namespace strata {

// ---------------------------------------------------------------------------
// S3 and H-prime indices
// ---------------------------------------------------------------------------

/// Permutations of S3 in the order used by the tables.
inline const std::array<std::string, 6>& s3_order() {
  static const std::array<std::string, 6> order = {"321", "231", "312", "132", "213", "123"};
  return order;
}

inline bool valid_s3(const std::string& w) {
  for (const auto& s : s3_order())
    if (s == w) return true;
  return false;
}

inline int s3_index(const std::string& w) {
  for (std::size_t k = 0; k < 6; ++k)
    if (s3_order()[k] == w) return static_cast<int>(k);
  throw IndexError("not a permutation of S3: '" + w + "'");
}

/// One-line inverse: w(i) = c means inverse(c) = i.
inline std::string s3_inverse(const std::string& w) {
  std::string r(3, '0');
  for (int i = 0; i < 3; ++i) r[static_cast<std::size_t>(w[static_cast<std::size_t>(i)] - '1')] = static_cast<char>('1' + i);
  return r;
}

inline int s3_length(const std::string& w) {
  std::vector<int> p;
  for (char c : w) p.push_back(c - '0');
  return detail::inversion_count(p);
}

struct HPrimeId {
  std::string plus = "321";
  std::string minus = "321";

  int index() const { return 6 * s3_index(plus) + s3_index(minus); }
  static HPrimeId from_index(int k) {
    return {s3_order()[static_cast<std::size_t>(k / 6)], s3_order()[static_cast<std::size_t>(k % 6)]};
  }
  std::string to_string() const { return "(" + plus + "," + minus + ")"; }
  /// Accepts "(321,132)", "321,132", "321-132" and "321132".
  static HPrimeId parse(const std::string& text) {
    std::string digits;
    for (char c : text) {
      if (c >= '0' && c <= '9') digits += c;
      else if (c != '(' && c != ')' && c != ',' && c != '-' && c != ' ')
        throw SyntaxError("bad H-prime id '" + text + "'", 0);
    }
    if (digits.size() != 6) throw SyntaxError("bad H-prime id '" + text + "'", 0);
    HPrimeId id{digits.substr(0, 3), digits.substr(3)};
    if (!valid_s3(id.plus) || !valid_s3(id.minus)) throw IndexError("not an S3 pair: '" + text + "'");
    return id;
  }
  /// Index of tau(I_omega).
  HPrimeId tau() const { return {s3_inverse(minus), s3_inverse(plus)}; }

  friend bool operator==(const HPrimeId& a, const HPrimeId& b) { return a.plus == b.plus && a.minus == b.minus; }
  friend bool operator!=(const HPrimeId& a, const HPrimeId& b) { return !(a == b); }
  friend bool operator<(const HPrimeId& a, const HPrimeId& b) { return a.index() < b.index(); }
};

/// Stratum rank dimension of the generic torus chart: 2 + l(w+) + l(w-).
inline int chart_dimension(const HPrimeId& id) { return 2 + s3_length(id.plus) + s3_length(id.minus); }

struct PrimitivePair {
  MinorProduct U;
  MinorProduct V;
};

struct StratumRecord {
  HPrimeId id;
  std::vector<MinorIndex> ideal_gens;
  std::vector<MinorIndex> ek_gens;
  std::vector<MinorProduct> center_gens;
  std::vector<PrimitivePair> primitive_gens;

  int rank() const { return static_cast<int>(center_gens.size()); }
};

// ---------------------------------------------------------------------------
// Loading
// ---------------------------------------------------------------------------

inline std::string data_dir() {
  if (const char* env = std::getenv("STRATA_KIT_DATA")) return env;
  return STRATA_KIT_DATA_DIR;
}

inline nlohmann::json load_json(const std::string& name) {
  const std::string path = data_dir() + "/" + name;
  std::ifstream in(path);
  if (!in) throw Error("cannot open data file " + path);
  return nlohmann::json::parse(in);
}

namespace detail {
inline MinorIndex parse_minor_atom(const std::string& text, const Ambient& amb) {
  const MinorProduct u = parse_minor_product(text, amb);
  if (u.factors.size() != 1 || u.factors[0].exponent != 1) throw SyntaxError("expected a single minor: " + text, 0);
  return u.factors[0].index;
}
}  // namespace detail

class Tables {
 public:
  static Tables from_json(const nlohmann::json& j) {
    const Ambient amb = sl3();
    Tables t;
    t.version_ = j.at("version").get<int>();
    for (const auto& c : j.at("ore").at("common")) t.common_.push_back(detail::parse_minor_atom(c, amb));
    for (const auto& w : s3_order()) {
      for (const auto& g : j.at("ore").at("plus").at(w)) t.plus_[w].push_back(detail::parse_minor_atom(g, amb));
      for (const auto& g : j.at("ore").at("minus").at(w)) t.minus_[w].push_back(detail::parse_minor_atom(g, amb));
    }
    t.records_.resize(36);
    std::vector<bool> seen(36, false);
    for (const auto& r : j.at("hprimes")) {
      StratumRecord rec;
      rec.id = HPrimeId{r.at("omega_plus").get<std::string>(), r.at("omega_minus").get<std::string>()};
      const int k = rec.id.index();
      if (seen[static_cast<std::size_t>(k)]) throw Error("duplicate record " + rec.id.to_string());
      seen[static_cast<std::size_t>(k)] = true;
      for (const auto& g : r.at("ideal")) rec.ideal_gens.push_back(detail::parse_minor_atom(g, amb));
      for (const auto& c : r.at("center")) rec.center_gens.push_back(parse_minor_product(c.get<std::string>(), amb));
      for (const auto& p : r.at("primitive"))
        rec.primitive_gens.push_back({parse_minor_product(p.at("U").get<std::string>(), amb),
                                      parse_minor_product(p.at("V").get<std::string>(), amb)});
      if (rec.primitive_gens.size() != rec.center_gens.size())
        throw RankMismatch("centre and primitive lists differ in length at " + rec.id.to_string());
      rec.ek_gens = t.plus_[rec.id.plus];
      for (const auto& g : t.minus_[rec.id.minus]) rec.ek_gens.push_back(g);
      for (const auto& g : t.common_) rec.ek_gens.push_back(g);
      t.records_[static_cast<std::size_t>(k)] = std::move(rec);
    }
    for (bool s : seen)
      if (!s) throw Error("data file does not list all 36 H-primes");
    for (const auto& f : j.value("flagged", nlohmann::json::array())) t.flagged_.push_back(f.dump());
    return t;
  }

  int version() const { return version_; }
  const StratumRecord& record(const HPrimeId& id) const { return records_[static_cast<std::size_t>(id.index())]; }
  const std::vector<StratumRecord>& records() const { return records_; }
  const std::vector<MinorIndex>& ore_plus(const std::string& w) const { return plus_.at(w); }
  const std::vector<MinorIndex>& ore_minus(const std::string& w) const { return minus_.at(w); }
  const std::vector<MinorIndex>& ore_common() const { return common_; }
  const std::vector<std::string>& flagged() const { return flagged_; }

 private:
  int version_ = 0;
  std::vector<StratumRecord> records_;
  std::map<std::string, std::vector<MinorIndex>> plus_, minus_;
  std::vector<MinorIndex> common_;
  std::vector<std::string> flagged_;
};

inline const Tables& tables() {
  static const Tables t = Tables::from_json(load_json("sl3_tables.json"));
  return t;
}

inline const StratumRecord& hprime(const HPrimeId& id) { return tables().record(id); }

inline std::vector<HPrimeId> all_hprimes() {
  std::vector<HPrimeId> out;
  for (int k = 0; k < 36; ++k) out.push_back(HPrimeId::from_index(k));
  return out;
}

/// E_{w+} u E_{w-} u {[23|23], W33}.
inline const std::vector<MinorIndex>& ek(const HPrimeId& id) { return hprime(id).ek_gens; }

inline CenterPresentation center_table(const HPrimeId& id) {
  CenterPresentation c;
  for (const auto& g : hprime(id).center_gens) c.generators.push_back({{}, true, g});
  return c;
}

/// U_i - l_i V_i over Q(l).
inline std::vector<LambdaPoly> primitive_table(const HPrimeId& id, const std::vector<ParamRational>& lambda) {
  const auto& rec = hprime(id);
  if (lambda.size() != rec.primitive_gens.size())
    throw RankMismatch("stratum " + id.to_string() + " has rank " + std::to_string(rec.primitive_gens.size()) +
                       ", got " + std::to_string(lambda.size()) + " parameters");
  const Ambient amb = sl3();
  std::vector<LambdaPoly> out;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].is_zero()) throw Error("primitive parameters must be nonzero");
    const auto& p = rec.primitive_gens[i];
    out.push_back(expand_product<ParamRational>(p.U, amb) - expand_product<ParamRational>(p.V, amb).scaled(lambda[i]));
  }
  return out;
}

inline std::vector<ParamRational> symbolic_lambda(int d) {
  std::vector<ParamRational> l;
  for (int i = 1; i <= d; ++i) l.push_back(ParamRational::param(i));
  return l;
}

// ---------------------------------------------------------------------------
// Ideals, cached per H-prime
// ---------------------------------------------------------------------------

/// Groebner basis of I_w + <D - 1>.
inline const GroebnerBasis<Rational>& ideal_gb(const HPrimeId& id) {
  static std::mutex mu;
  static std::map<int, GroebnerBasis<Rational>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(id.index());
  if (it == cache.end()) it = cache.emplace(id.index(), ideal_basis(hprime(id).ideal_gens, sl3())).first;
  return it->second;
}

/// Reducer for the quantum ideal generated by theta^{-1} of the generators
/// and D_q - 1. Not shared across threads.
inline NCReducer& quantum_reducer(const HPrimeId& id) {
  thread_local std::map<int, NCReducer> cache;
  auto it = cache.find(id.index());
  if (it == cache.end()) it = cache.emplace(id.index(), quantum_ideal(hprime(id).ideal_gens, sl3())).first;
  return it->second;
}

inline bool in_ideal(const MinorIndex& m, const HPrimeId& id) { return member(minor(m, sl3()), ideal_gb(id)); }

// ---------------------------------------------------------------------------
// Poset
// ---------------------------------------------------------------------------

using Poset = std::array<std::array<bool, 36>, 36>;

/// Entry [J][K] is true iff J is contained in K.
inline const Poset& poset() {
  static const Poset P = [] {
    Poset p{};
    for (int a = 0; a < 36; ++a) {
      const auto& ga = hprime(HPrimeId::from_index(a)).ideal_gens;
      for (int b = 0; b < 36; ++b) {
        const auto& G = ideal_gb(HPrimeId::from_index(b));
        bool all = true;
        for (const auto& g : ga)
          if (!member(minor(g, sl3()), G)) {
            all = false;
            break;
          }
        p[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = all;
      }
    }
    return p;
  }();
  return P;
}

inline bool contained(const HPrimeId& J, const HPrimeId& K) {
  return poset()[static_cast<std::size_t>(J.index())][static_cast<std::size_t>(K.index())];
}

inline std::vector<HPrimeId> strictly_above(const HPrimeId& J) {
  std::vector<HPrimeId> out;
  for (const auto& K : all_hprimes())
    if (K != J && contained(J, K)) out.push_back(K);
  return out;
}

/// Comparable pairs J <= K (including J = K), in index order.
inline std::vector<std::pair<HPrimeId, HPrimeId>> comparable_pairs() {
  std::vector<std::pair<HPrimeId, HPrimeId>> out;
  for (const auto& J : all_hprimes())
    for (const auto& K : all_hprimes())
      if (contained(J, K)) out.emplace_back(J, K);
  return out;
}

struct PosetReport {
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;
  bool unique_minimum = false;
  bool unique_maximum = false;
  bool ok() const { return reflexive && antisymmetric && transitive && unique_minimum && unique_maximum; }
};

inline PosetReport poset_report() {
  const Poset& P = poset();
  PosetReport r;
  for (std::size_t a = 0; a < 36; ++a) {
    if (!P[a][a]) r.reflexive = false;
    for (std::size_t b = 0; b < 36; ++b) {
      if (a != b && P[a][b] && P[b][a]) r.antisymmetric = false;
      for (std::size_t c = 0; c < 36; ++c)
        if (P[a][b] && P[b][c] && !P[a][c]) r.transitive = false;
    }
  }
  std::vector<std::size_t> mins, maxs;
  for (std::size_t a = 0; a < 36; ++a) {
    bool below_all = true, above_all = true;
    for (std::size_t b = 0; b < 36; ++b) {
      if (!P[a][b]) below_all = false;
      if (!P[b][a]) above_all = false;
    }
    if (below_all) mins.push_back(a);
    if (above_all) maxs.push_back(a);
  }
  r.unique_minimum = mins.size() == 1 && HPrimeId::from_index(static_cast<int>(mins[0])) == HPrimeId{"321", "321"};
  r.unique_maximum = maxs.size() == 1 && HPrimeId::from_index(static_cast<int>(maxs[0])) == HPrimeId{"123", "123"};
  return r;
}

// ---------------------------------------------------------------------------
// Structural checks on the transcription
// ---------------------------------------------------------------------------

struct CheckFailure {
  std::string where;
  std::string detail;
};

/// tau(I_{w+,w-}) = I_{w-^{-1},w+^{-1}} as ideals, and likewise for E sets.
inline std::vector<CheckFailure> tau_symmetry_failures() {
  std::vector<CheckFailure> out;
  const Ambient amb = sl3();
  for (const auto& id : all_hprimes()) {
    const HPrimeId t = id.tau();
    std::vector<QPoly> image;
    for (const auto& g : hprime(id).ideal_gens) image.push_back(minor(g.transposed(), amb));
    const GroebnerBasis<Rational> G = buchberger(with_det_relation(image, amb));
    if (!same_ideal(G, ideal_gb(t))) out.push_back({id.to_string(), "tau image differs from " + t.to_string()});
    std::set<MinorIndex> e1, e2;
    for (const auto& g : ek(id)) e1.insert(g.transposed());
    for (const auto& g : ek(t)) e2.insert(g);
    if (e1 != e2) out.push_back({id.to_string(), "tau(E) differs from E at " + t.to_string()});
  }
  return out;
}

inline bool tau_symmetry_check() { return tau_symmetry_failures().empty(); }

/// Every bracket of an ideal generator with a coordinate lies in the ideal.
inline std::vector<CheckFailure> closure_failures() {
  std::vector<CheckFailure> out;
  const Ambient amb = sl3();
  for (const auto& id : all_hprimes())
    for (const auto& g : hprime(id).ideal_gens)
      for (int v = 0; v < amb.nvars(); ++v)
        if (!member(bracket(minor(g, amb), QPoly::variable(v), amb), ideal_gb(id)))
          out.push_back({id.to_string(), "{" + g.to_string() + "," + var_name(amb, v) + "} not in ideal"});
  return out;
}

inline std::vector<CheckFailure> homogeneity_failures() {
  std::vector<CheckFailure> out;
  const Ambient amb = sl3();
  for (const auto& id : all_hprimes()) {
    auto test = [&](const MinorIndex& g) {
      try {
        (void)h_degree(minor(g, amb), amb);
      } catch (const NonHomogeneous& e) {
        out.push_back({id.to_string(), g.to_string() + ": " + e.what()});
      }
    };
    for (const auto& g : hprime(id).ideal_gens) test(g);
    for (const auto& g : ek(id)) test(g);
  }
  return out;
}

/// No E_K generator lies in K.
inline std::vector<CheckFailure> disjointness_failures() {
  std::vector<CheckFailure> out;
  for (const auto& K : all_hprimes())
    for (const auto& e : ek(K))
      if (in_ideal(e, K)) out.push_back({K.to_string(), e.to_string() + " lies in K"});
  return out;
}

/// For L not contained in K some element of E_K (or a product of them) lies
/// in L. Follows the proof: pick a generator u of L outside K; coordinates
/// and the two corner minors are tested directly, W21 and W12 through the
/// elements their presence forces into L.
inline std::vector<CheckFailure> killing_failures() {
  std::vector<CheckFailure> out;
  const Ambient amb = sl3();
  const MinorIndex w21 = MinorIndex::coordinate(2, 1), w12 = MinorIndex::coordinate(1, 2);
  const std::vector<MinorIndex> via21 = {MinorIndex::coordinate(3, 1), MinorIndex{{2, 3}, {1, 3}},
                                         MinorIndex{{2, 3}, {1, 2}}};
  std::vector<MinorIndex> via12;
  for (const auto& m : via21) via12.push_back(m.transposed());
  for (const auto& K : all_hprimes()) {
    const auto& E = ek(K);
    auto in_E = [&](const MinorIndex& m) { return std::find(E.begin(), E.end(), m) != E.end(); };
    for (const auto& L : all_hprimes()) {
      if (contained(L, K)) continue;
      const GroebnerBasis<Rational>& GL = ideal_gb(L);
      bool killed = false;
      std::string tried;
      for (const auto& u : hprime(L).ideal_gens) {
        if (in_ideal(u, K)) continue;
        std::vector<MinorIndex> candidates;
        if (u == w21) candidates = via21;
        else if (u == w12) candidates = via12;
        else candidates = {u};
        for (const auto& c : candidates) {
          tried += c.to_string() + " ";
          if (in_E(c) && member(minor(c, amb), GL)) killed = true;
        }
        if (killed) break;
      }
      if (!killed) {
        // Products of Ore generators as a last resort (W21*W32, W21*W33).
        for (const auto& a : E)
          for (const auto& b : E)
            if (!killed && member(minor(a, amb) * minor(b, amb), GL)) killed = true;
      }
      if (!killed) out.push_back({L.to_string() + " vs " + K.to_string(), "no Ore generator in L; tried " + tried});
    }
  }
  return out;
}

/// Each centre table entry is Poisson-central modulo its H-prime.
inline std::vector<CheckFailure> center_table_failures() {
  std::vector<CheckFailure> out;
  for (const auto& id : all_hprimes())
    for (const auto& z : hprime(id).center_gens) {
      try {
        if (!is_poisson_central_fraction(z, ideal_gb(id), sl3()))
          out.push_back({id.to_string(), z.to_string() + " is not Poisson-central"});
      } catch (const Error& e) {
        out.push_back({id.to_string(), z.to_string() + ": " + e.what()});
      }
    }
  return out;
}

/// The primitive table agrees with the centre table: U_i V_i^{-1} is the i-th centre generator.
inline std::vector<CheckFailure> table_consistency_failures() {
  std::vector<CheckFailure> out;
  for (const auto& id : all_hprimes()) {
    const auto& r = hprime(id);
    for (std::size_t i = 0; i < r.center_gens.size(); ++i) {
      const MinorProduct& z = r.center_gens[i];
      const auto& p = r.primitive_gens[i];
      MinorProduct num = z.numerator(), den = z.denominator();
      MinorProduct V = p.V;
      if (V.factors.size() == 1 && V.factors[0].index.rows.empty()) V = {};
      if (num != p.U || den != V)
        out.push_back({id.to_string(), "primitive table row " + std::to_string(i + 1) + " disagrees with " + z.to_string()});
    }
  }
  return out;
}

}  // namespace strata
