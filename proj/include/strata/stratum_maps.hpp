#pragma once

// Localized presentations R_J[E_JK^{-1}] as skew algebras, the centres
// PZ_JK / Z_JK, the maps g_JK and f_JK as monomial maps between centre
// presentations, the induced map on closed points, and the primitive pairing.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "strata/strata_data.hpp"

namespace strata {

// ---------------------------------------------------------------------------
// Chart recipes
// ---------------------------------------------------------------------------

struct SubstitutionIdentity {
  MinorIndex eliminates;
  MinorIndex denominator;
  bool right = true;  // eliminates * denominator on the left-hand side
  ExprAst lhs;
  ExprAst rhs;
  std::string text;

  SubstitutionIdentity transposed() const {
    SubstitutionIdentity t = *this;
    t.eliminates = eliminates.transposed();
    t.denominator = denominator.transposed();
    t.lhs = transpose_expr(lhs);
    t.rhs = transpose_expr(rhs);
    t.text = print_expr(t.lhs) + " = " + print_expr(t.rhs);
    return t;
  }
};

/// denominator * target = q^qexp * numerator modulo J.
struct MonomialRewrite {
  MinorIndex target;
  MinorProduct denominator;
  MinorProduct numerator;
  int qexp = 0;

  MonomialRewrite transposed() const {
    return {target.transposed(), denominator.transposed(), numerator.transposed(), qexp};
  }
};

struct ChartVariant {
  std::string name;
  std::optional<MinorIndex> requires_inverse;
  std::vector<MinorIndex> generators;
  std::vector<SubstitutionIdentity> identities;
  std::vector<MonomialRewrite> rewrites;

  ChartVariant transposed() const {
    ChartVariant t;
    t.name = name == "-" ? name : name + "'";
    if (requires_inverse) t.requires_inverse = requires_inverse->transposed();
    for (const auto& g : generators) t.generators.push_back(g.transposed());
    for (const auto& i : identities) t.identities.push_back(i.transposed());
    for (const auto& r : rewrites) t.rewrites.push_back(r.transposed());
    return t;
  }
};

struct ComponentRecipe {
  std::vector<ChartVariant> variants;
  std::string auxiliary;  // variant used with an auxiliary inverse
};

class ChartData {
 public:
  static ChartData from_json(const nlohmann::json& j) {
    const Ambient amb = sl3();
    ChartData d;
    for (const auto& g : j.at("common").at("generators")) d.common_.push_back(detail::parse_minor_atom(g, amb));
    for (const auto& i : j.at("common").at("identities")) d.common_ids_.push_back(parse_identity(i));
    for (const auto& w : s3_order()) {
      const auto& c = j.at("upper").at(w);
      ComponentRecipe r;
      r.auxiliary = c.value("auxiliary", "");
      for (const auto& v : c.at("variants")) r.variants.push_back(parse_variant(v));
      d.upper_[w] = std::move(r);
    }
    for (const auto& w : s3_order()) {
      ComponentRecipe r = d.upper_.at(s3_inverse(w));
      for (auto& v : r.variants) v = v.transposed();
      if (!r.auxiliary.empty() && r.auxiliary != "-") r.auxiliary += "'";
      d.lower_[w] = std::move(r);
    }
    for (const auto& [label, ids] : j.at("cases").items())
      for (const auto& s : ids) d.cases_[HPrimeId::parse(s.get<std::string>()).index()] = label;
    const nlohmann::json overrides = j.value("case_overrides", nlohmann::json::object());
    for (const auto& [label, o] : overrides.items()) {
      ChartVariant cv = parse_variant(o.at("common"));
      cv.name = "common";
      d.overrides_[label] = std::move(cv);
    }
    ChartVariant base;
    base.name = "common";
    base.generators = d.common_;
    base.identities = d.common_ids_;
    d.base_ = std::move(base);
    return d;
  }

  /// Common generators, identities and rewrites for the case of `id`.
  const ChartVariant& common_for(const HPrimeId& id) const {
    auto it = overrides_.find(case_label(id));
    return it == overrides_.end() ? base_ : it->second;
  }

  const std::vector<MinorIndex>& common() const { return common_; }
  const std::vector<SubstitutionIdentity>& common_identities() const { return common_ids_; }
  const ComponentRecipe& upper(const std::string& w) const { return upper_.at(w); }
  const ComponentRecipe& lower(const std::string& w) const { return lower_.at(w); }
  std::string case_label(const HPrimeId& id) const {
    auto it = cases_.find(id.index());
    return it == cases_.end() ? "" : it->second;
  }

 private:
  static ChartVariant parse_variant(const nlohmann::json& v) {
    const Ambient amb = sl3();
    ChartVariant cv;
    cv.name = v.value("name", "");
    const std::string req = v.value("requires", "");
    if (!req.empty()) cv.requires_inverse = detail::parse_minor_atom(req, amb);
    for (const auto& g : v.at("generators")) cv.generators.push_back(detail::parse_minor_atom(g, amb));
    for (const auto& i : v.at("identities")) cv.identities.push_back(parse_identity(i));
    const nlohmann::json rewrites = v.value("rewrites", nlohmann::json::array());
    for (const auto& rw : rewrites) {
      MonomialRewrite m;
      m.target = detail::parse_minor_atom(rw.at("target").get<std::string>(), amb);
      m.denominator = parse_minor_product(rw.at("denominator").get<std::string>(), amb);
      m.numerator = parse_minor_product(rw.at("numerator").get<std::string>(), amb);
      m.qexp = rw.at("q").get<int>();
      cv.rewrites.push_back(m);
    }
    return cv;
  }

  static SubstitutionIdentity parse_identity(const nlohmann::json& i) {
    const Ambient amb = sl3();
    SubstitutionIdentity s;
    s.eliminates = detail::parse_minor_atom(i.at("eliminates").get<std::string>(), amb);
    s.denominator = detail::parse_minor_atom(i.at("denominator").get<std::string>(), amb);
    s.right = i.at("side").get<std::string>() == "right";
    const std::string rel = i.at("relation").get<std::string>();
    const auto eq = rel.find('=');
    if (eq == std::string::npos) throw SyntaxError("identity without '=': " + rel, 0);
    s.lhs = parse_expr(rel.substr(0, eq), amb, 'X');
    s.rhs = parse_expr(rel.substr(eq + 1), amb, 'X');
    s.text = rel;
    return s;
  }

  std::vector<MinorIndex> common_;
  std::vector<SubstitutionIdentity> common_ids_;
  std::map<std::string, ComponentRecipe> upper_, lower_;
  std::map<int, std::string> cases_;
  std::map<std::string, ChartVariant> overrides_;
  ChartVariant base_;
};

inline const ChartData& chart_data() {
  static const ChartData d = ChartData::from_json(load_json("sl3_charts.json"));
  return d;
}

// ---------------------------------------------------------------------------
// Certificates modulo an H-prime
// ---------------------------------------------------------------------------

/// a - b lies in the ideal J on the given side.
inline bool difference_in_ideal(const ExprAst& a, const ExprAst& b, const HPrimeId& J, Side side) {
  const Ambient amb = sl3();
  if (side == Side::Quantum) {
    const NCPoly d = eval_quantum(a, amb) - eval_quantum(b, amb);
    return quantum_reducer(J).reduce(d).is_zero();
  }
  const QPoly d = eval_poisson<Rational>(classical_limit(a), amb) - eval_poisson<Rational>(classical_limit(b), amb);
  return member(d, ideal_gb(J));
}

inline NCPoly nc_value(const MinorProduct& u) { return nc_expand_product(u, sl3()); }
inline QPoly comm_value(const MinorProduct& u) { return expand_product(u, sl3()); }

/// Scalar c with a = c*b modulo J, b not reducing to zero. On the quantum side
/// c is c0*q^k.
struct Proportionality {
  bool ok = false;
  Rational scalar = 0;
  int qexp = 0;
  std::string reason;
};

inline Proportionality proportional_mod(const MinorProduct& a, const MinorProduct& b, const HPrimeId& J, Side side) {
  Proportionality p;
  if (side == Side::Quantum) {
    NCReducer& red = quantum_reducer(J);
    const NCPoly A = red.reduce(nc_value(a)), B = red.reduce(nc_value(b));
    if (B.is_zero() || A.is_zero()) {
      p.reason = "a side reduces to zero";
      return p;
    }
    if (A.leading_word() != B.leading_word()) {
      p.reason = "leading words differ";
      return p;
    }
    QLaurent ratio;
    try {
      ratio = qlaurent_div_exact(A.leading_coeff(), B.leading_coeff());
    } catch (const NotDivisible&) {
      p.reason = "leading coefficients not proportional";
      return p;
    }
    const auto mono = ratio.as_monomial();
    if (!mono) {
      p.reason = "ratio is not a unit";
      return p;
    }
    if (!(A - B.scaled(ratio)).is_zero()) {
      p.reason = "difference does not reduce to zero";
      return p;
    }
    p.ok = true;
    p.qexp = mono->first;
    p.scalar = mono->second;
    return p;
  }
  const GroebnerBasis<Rational>& G = ideal_gb(J);
  const QPoly A = normal_form(comm_value(a), G), B = normal_form(comm_value(b), G);
  if (B.is_zero() || A.is_zero()) {
    p.reason = "a side lies in the ideal";
    return p;
  }
  const Rational c = A.lc() / B.lc();
  if (!(A - B.scaled(c)).is_zero()) {
    p.reason = "not proportional modulo the ideal";
    return p;
  }
  p.ok = true;
  p.scalar = c;
  return p;
}

inline bool product_in_ideal(const MinorProduct& a, const HPrimeId& J, Side side) {
  if (side == Side::Quantum) return quantum_reducer(J).reduce(nc_value(a)).is_zero();
  return member(comm_value(a), ideal_gb(J));
}

// ---------------------------------------------------------------------------
// Localized presentations
// ---------------------------------------------------------------------------

struct IdentityCertificate {
  std::string text;
  std::string eliminates;
  bool verified = false;
};

struct LocalizedPresentation {
  HPrimeId J;
  HPrimeId K;
  Side side = Side::Poisson;
  std::string case_label;
  std::string upper_variant;
  std::string lower_variant;
  std::vector<MinorIndex> generators;
  std::vector<bool> inverted;
  std::vector<int> auxiliary;                 // generator indices inverted only in the enlarged algebra
  std::vector<MinorIndex> inverted_set;       // E_JK generators followed by auxiliary inverses
  std::map<std::string, IntVector> ek_image;  // E_K generator -> exponents in the chart
  std::vector<IdentityCertificate> identities;

  std::vector<MinorProduct> labels() const {
    std::vector<MinorProduct> out;
    for (const auto& g : generators) out.push_back(single(g));
    return out;
  }
  int index_of(const MinorIndex& m) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == m) return static_cast<int>(i);
    return -1;
  }
};

namespace detail {

inline std::string side_key(Side s) { return s == Side::Quantum ? "q" : "p"; }

inline bool identity_verified(const SubstitutionIdentity& id, const HPrimeId& J, Side side) {
  static std::map<std::tuple<int, std::string, std::string>, bool> cache;
  const auto key = std::make_tuple(J.index(), id.text, side_key(side));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const bool ok = difference_in_ideal(id.lhs, id.rhs, J, side);
  cache.emplace(key, ok);
  return ok;
}

inline bool rewrite_verified(const MonomialRewrite& r, const HPrimeId& J, Side side) {
  const Ambient amb = sl3();
  ExprAst lhs = to_ast(r.denominator * single(r.target), 'X');
  ExprAst rhs = to_ast(r.numerator, 'X');
  if (r.qexp != 0) {
    ExprAst p;
    p.kind = ExprAst::Kind::Product;
    p.kids = {ExprAst::power(ExprAst::q(), r.qexp), rhs};
    rhs = p;
  }
  (void)amb;
  return difference_in_ideal(lhs, rhs, J, side);
}

inline const ChartVariant* choose_variant(const ComponentRecipe& r, const std::vector<MinorIndex>& EK, bool& aux) {
  aux = false;
  for (const auto& v : r.variants) {
    if (!v.requires_inverse) return &v;
    if (std::find(EK.begin(), EK.end(), *v.requires_inverse) != EK.end()) return &v;
  }
  for (const auto& v : r.variants)
    if (v.name == r.auxiliary) {
      aux = true;
      return &v;
    }
  return nullptr;
}

}  // namespace detail

/// The chart of R_J[E_JK^{-1}] (or of its enlargement by an auxiliary
/// inverse) with every identity and rewrite certified on `side`.
inline LocalizedPresentation localized_presentation(const HPrimeId& J, const HPrimeId& K, Side side) {
  if (!contained(J, K)) throw Error(J.to_string() + " is not contained in " + K.to_string());
  const ChartData& cd = chart_data();
  const std::vector<MinorIndex>& EK = ek(K);
  LocalizedPresentation P;
  P.J = J;
  P.K = K;
  P.side = side;
  P.case_label = cd.case_label(J);

  bool aux_up = false, aux_low = false;
  const ChartVariant* up = detail::choose_variant(cd.upper(J.minus), EK, aux_up);
  const ChartVariant* low = detail::choose_variant(cd.lower(J.plus), EK, aux_low);
  if (!up || !low) throw CaseUnverified("no chart recipe for " + J.to_string() + " below " + K.to_string());
  P.upper_variant = up->name;
  P.lower_variant = low->name;

  const ChartVariant& common = cd.common_for(J);
  for (const auto& g : common.generators) P.generators.push_back(g);
  for (const auto& g : up->generators) P.generators.push_back(g);
  for (const auto& g : low->generators) P.generators.push_back(g);
  if (static_cast<int>(P.generators.size()) != chart_dimension(J))
    throw CaseUnverified("chart for " + J.to_string() + " has " + std::to_string(P.generators.size()) +
                         " generators, expected " + std::to_string(chart_dimension(J)));
  P.inverted.assign(P.generators.size(), false);

  // Inverses coming from E_K.
  std::vector<const MonomialRewrite*> rewrites;
  for (const auto& r : common.rewrites) rewrites.push_back(&r);
  for (const auto& r : up->rewrites) rewrites.push_back(&r);
  for (const auto& r : low->rewrites) rewrites.push_back(&r);
  for (const auto& e : EK) {
    IntVector exps(P.generators.size(), 0);
    const int at = P.index_of(e);
    if (at >= 0) {
      exps[static_cast<std::size_t>(at)] = 1;
      P.inverted[static_cast<std::size_t>(at)] = true;
    } else {
      const MonomialRewrite* rw = nullptr;
      for (const auto* r : rewrites)
        if (r->target == e) rw = r;
      if (!rw) throw CaseUnverified(e.to_string('W') + " is not a monomial in the chart of " + J.to_string());
      if (!detail::rewrite_verified(*rw, J, side))
        throw CaseUnverified("rewrite of " + e.to_string('W') + " fails modulo " + J.to_string() + " (" +
                             side_name(side) + ")");
      for (const auto& f : rw->numerator.factors) {
        const int i = P.index_of(f.index);
        if (i < 0) throw CaseUnverified("rewrite of " + e.to_string('W') + " leaves the chart");
        exps[static_cast<std::size_t>(i)] += f.exponent;
        P.inverted[static_cast<std::size_t>(i)] = true;
      }
      for (const auto& f : rw->denominator.factors) {
        const int i = P.index_of(f.index);
        if (i < 0) throw CaseUnverified("rewrite of " + e.to_string('W') + " leaves the chart");
        exps[static_cast<std::size_t>(i)] -= f.exponent;
      }
    }
    P.ek_image[e.to_string('W')] = exps;
    P.inverted_set.push_back(e);
  }
  for (const auto& [name, exps] : P.ek_image)
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] < 0 && !P.inverted[i])
        throw CaseUnverified("rewrite of " + name + " divides by a non-inverted generator");

  auto add_aux = [&](const ChartVariant* v) {
    const int i = P.index_of(*v->requires_inverse);
    if (i < 0) throw CaseUnverified("auxiliary inverse outside the chart");
    if (!P.inverted[static_cast<std::size_t>(i)]) {
      P.inverted[static_cast<std::size_t>(i)] = true;
      P.auxiliary.push_back(i);
      P.inverted_set.push_back(*v->requires_inverse);
    }
  };
  if (aux_up) add_aux(up);
  if (aux_low) add_aux(low);

  // Every coordinate must be reachable from the chart through the identities.
  const Ambient amb = sl3();
  std::set<MinorIndex> avail(P.generators.begin(), P.generators.end());
  auto available = [&](const MinorIndex& m) {
    if (avail.count(m) || in_ideal(m, J)) return true;
    for (int r : m.rows)
      for (int c : m.cols)
        if (!avail.count(MinorIndex::coordinate(r, c)) && !in_ideal(MinorIndex::coordinate(r, c), J)) return false;
    return true;
  };
  std::vector<const SubstitutionIdentity*> ids;
  for (const auto& i : common.identities) ids.push_back(&i);
  for (const auto& i : up->identities) ids.push_back(&i);
  for (const auto& i : low->identities) ids.push_back(&i);
  std::vector<bool> used(ids.size(), false);
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (used[k]) continue;
      const SubstitutionIdentity& id = *ids[k];
      if (available(id.eliminates)) {
        used[k] = true;
        continue;
      }
      const int d = P.index_of(id.denominator);
      const bool in_e = std::find(EK.begin(), EK.end(), id.denominator) != EK.end();
      if (!in_e && (d < 0 || !P.inverted[static_cast<std::size_t>(d)])) continue;
      std::vector<MinorIndex> atoms;
      collect_atoms(id.lhs, atoms);
      collect_atoms(id.rhs, atoms);
      bool ready = true;
      for (const auto& a : atoms)
        if (a != id.eliminates && !available(a)) ready = false;
      if (!ready) continue;
      const bool ok = detail::identity_verified(id, J, side);
      P.identities.push_back({id.text, id.eliminates.to_string('W'), ok});
      if (!ok)
        throw CaseUnverified("identity '" + id.text + "' fails modulo " + J.to_string() + " (" + side_name(side) + ")");
      avail.insert(id.eliminates);
      used[k] = true;
      progress = true;
    }
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (!available(MinorIndex::coordinate(i, j)))
        throw CaseUnverified("W" + std::to_string(i) + std::to_string(j) + " is not generated by the chart of " +
                             J.to_string() + " below " + K.to_string());
  (void)amb;
  return P;
}

// ---------------------------------------------------------------------------
// Skew matrices and intermediate centres
// ---------------------------------------------------------------------------

/// Commutation matrix of the chart generators modulo J (cached per chart).
inline const IntMatrix& chart_matrix(const HPrimeId& J, const std::vector<MinorIndex>& gens, Side side) {
  static std::map<std::tuple<int, std::string, std::string>, IntMatrix> cache;
  std::string key;
  for (const auto& g : gens) key += g.to_string() + ";";
  const auto k = std::make_tuple(J.index(), key, detail::side_key(side));
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  const Ambient amb = sl3();
  IntMatrix M(gens.size(), IntVector(gens.size(), 0));
  if (side == Side::Quantum) {
    NCReducer& red = quantum_reducer(J);
    std::vector<NCPoly> v;
    for (const auto& g : gens) v.push_back(q_minor(g, amb));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        const QCommutation r = q_commutation(v[i], v[j], amb, &red);
        if (!r.exponent)
          throw NotQCommuting(gens[i].to_string('X') + ", " + gens[j].to_string('X') + " modulo " + J.to_string() +
                              ": " + (r.inconclusive ? "inconclusive: " : "") + r.reason);
        M[i][j] = *r.exponent;
        M[j][i] = -*r.exponent;
      }
  } else {
    const GroebnerBasis<Rational>& G = ideal_gb(J);
    std::vector<QPoly> v;
    for (const auto& g : gens) v.push_back(minor(g, amb));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        const auto c = log_commutation(v[i], v[j], G, amb);
        if (!c) throw NotLogCommuting(gens[i].to_string() + ", " + gens[j].to_string() + " modulo " + J.to_string());
        M[i][j] = *c;
        M[j][i] = -*c;
      }
  }
  return cache.emplace(k, std::move(M)).first->second;
}

inline SkewAlgebra presentation_skew(const LocalizedPresentation& P) {
  SkewAlgebra S;
  S.n = static_cast<int>(P.generators.size());
  S.inverted = P.inverted;
  S.labels = P.labels();
  S.matrix = chart_matrix(P.J, P.generators, P.side);
  S.check();
  return S;
}

struct IntermediateCentre {
  LocalizedPresentation presentation;
  SkewAlgebra skew;
  CenterPresentation centre;
  /// True when no central monomial of the enlarged algebra involves an
  /// auxiliary inverse, so the restriction loses nothing.
  bool auxiliary_free = true;
};

/// PZ_JK (Poisson side) or Z_JK (quantum side) as central monomials of the
/// chart; auxiliary inverses are removed by restricting to exponent zero.
inline IntermediateCentre pz_jk(const HPrimeId& J, const HPrimeId& K, Side side) {
  IntermediateCentre out;
  out.presentation = localized_presentation(J, K, side);
  out.skew = presentation_skew(out.presentation);
  IntMatrix cons;
  for (int a : out.presentation.auxiliary) {
    IntVector row(static_cast<std::size_t>(out.skew.n), 0);
    row[static_cast<std::size_t>(a)] = 1;
    cons.push_back(row);
  }
  out.centre = central_monomials(out.skew, cons);
  out.auxiliary_free = out.presentation.auxiliary.empty() || kernel_avoids(out.skew, out.presentation.auxiliary);
  return out;
}

// ---------------------------------------------------------------------------
// Monomial maps
// ---------------------------------------------------------------------------

struct MonomialMap {
  std::vector<std::string> source;
  std::vector<std::string> target;
  IntMatrix matrix;              // row i: exponents of source i in the target generators
  std::vector<Rational> scalar;  // source_i = scalar_i * q^qexp_i * target^row_i
  std::vector<int> qexp;
  std::vector<bool> zero;  // image is 0 (f only)
};

namespace detail {

/// Integer a with sum a_j deg(t_j) = deg(z) modulo the all-ones vector.
inline std::optional<IntVector> solve_degrees(const std::vector<Degree>& t, const Degree& z) {
  const std::size_t rows = z.size(), d = t.size();
  // Unknowns a_1..a_d and s (multiple of the all-ones vector).
  std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(d + 2, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < d; ++j) M[r][j] = t[j][r];
    M[r][d] = 1;
    M[r][d + 1] = z[r];
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c <= d && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && M[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[row]);
    const Rational inv = Rational(1) / M[row][c];
    for (auto& x : M[row]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r)
      if (r != row && M[r][c] != 0) {
        const Rational f = M[r][c];
        for (std::size_t k = 0; k < d + 2; ++k) M[r][k] -= f * M[row][k];
      }
    pivots.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (M[r][d + 1] != 0) return std::nullopt;
  if (pivots.size() != d + 1) return std::nullopt;  // dependent degrees
  IntVector a(d, 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == d) continue;
    const Rational v = M[k][d + 1];
    if (v.get_den() != 1) return std::nullopt;
    a[pivots[k]] = v.get_num().get_si();
  }
  return a;
}

inline Degree raw_degree(const MinorProduct& u) {
  Degree d(6, 0);
  for (const auto& f : u.factors) {
    const Degree g = minor_degree(f.index, sl3());
    for (std::size_t k = 0; k < 6; ++k) d[k] += f.exponent * g[k];
  }
  return d;
}

/// t^a as numerator/denominator over a list of U V^{-1} generators.
inline std::pair<MinorProduct, MinorProduct> table_power(const std::vector<MinorProduct>& t, const IntVector& a) {
  MinorProduct num, den;
  for (std::size_t j = 0; j < t.size(); ++j) {
    const MinorProduct U = t[j].numerator(), V = t[j].denominator();
    const int e = static_cast<int>(a[j]);
    for (int k = 0; k < (e < 0 ? -e : e); ++k) {
      num = num * (e > 0 ? U : V);
      den = den * (e > 0 ? V : U);
    }
  }
  return {num, den};
}

/// z = Zn Zd^{-1} equals c * t^a modulo I (a solved from degrees).
struct MonomialFit {
  IntVector row;
  Proportionality scalar;
};

inline MonomialFit fit_monomial(const MinorProduct& z, const std::vector<MinorProduct>& table, const HPrimeId& I,
                                Side side) {
  std::vector<Degree> t;
  for (const auto& g : table) t.push_back(raw_degree(g));
  const auto a = solve_degrees(t, raw_degree(z));
  if (!a) throw NotMonomial(z.to_string() + " has no degree solution over the centre of " + I.to_string());
  const auto [Pn, Pd] = table_power(table, *a);
  const MinorProduct Zn = z.numerator(), Zd = z.denominator();
  MonomialFit fit{*a, proportional_mod(Zn * Pd, Pn * Zd, I, side)};
  if (!fit.scalar.ok)
    throw NotMonomial(z.to_string() + " is not a monomial in the centre of " + I.to_string() + ": " +
                      fit.scalar.reason);
  if (side == Side::Quantum && !Zd.is_one() && !Pd.is_one()) {
    const QCommutation r = q_commutation(nc_value(Zd), nc_value(Pd), sl3(), &quantum_reducer(I));
    if (!r.exponent) throw NotMonomial("denominators of " + z.to_string() + " do not q-commute: " + r.reason);
    fit.scalar.qexp += *r.exponent;
  }
  return fit;
}

inline std::vector<std::string> label_strings(const std::vector<MinorProduct>& v, char letter) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string(letter));
  return out;
}

}  // namespace detail

/// Centre generators of R_J in the chosen presentation (theta^{-1} of the
/// table on the quantum side: the same labels).
inline std::vector<MinorProduct> table_generators(const HPrimeId& id) { return hprime(id).center_gens; }

/// PZ_JK with generators oriented against the centre table entry of J, together with g_JK.
struct CentreMaps {
  IntermediateCentre pz;
  std::vector<MinorProduct> generators;  // chart-level labels after orientation
  std::vector<MinorProduct> display;     // centre table label when the g-row is a unit vector
  MonomialMap g;
  MonomialMap f;
};

inline MinorProduct chart_product(const LocalizedPresentation& P, const IntVector& m) {
  return monomial_label(P.labels(), m);
}

inline CentreMaps centre_maps(const HPrimeId& J, const HPrimeId& K, Side side) {
  CentreMaps cm;
  cm.pz = pz_jk(J, K, side);
  const auto tJ = table_generators(J), tK = table_generators(K);
  const char letter = side == Side::Quantum ? 'X' : 'Y';
  cm.g.target = detail::label_strings(tJ, letter);
  cm.f.target = detail::label_strings(tK, letter);
  for (auto& gen : cm.pz.centre.generators) {
    MinorProduct z = chart_product(cm.pz.presentation, gen.exponents);
    detail::MonomialFit fit = detail::fit_monomial(z, tJ, J, side);
    const auto first = std::find_if(fit.row.begin(), fit.row.end(), [](std::int64_t x) { return x != 0; });
    if (gen.invertible && first != fit.row.end() && *first < 0) {
      for (auto& x : gen.exponents) x = -x;
      z = chart_product(cm.pz.presentation, gen.exponents);
      fit = detail::fit_monomial(z, tJ, J, side);
    }
    gen.label = z;
    cm.generators.push_back(z);
    MinorProduct shown = z;
    int ones = 0, unit_at = -1;
    for (std::size_t j = 0; j < fit.row.size(); ++j) {
      if (fit.row[j] == 1) {
        ++ones;
        unit_at = static_cast<int>(j);
      } else if (fit.row[j] != 0) {
        ones = 99;
      }
    }
    if (ones == 1 && fit.scalar.scalar == 1 && fit.scalar.qexp == 0) shown = tJ[static_cast<std::size_t>(unit_at)];
    cm.display.push_back(shown);
    cm.g.source.push_back(shown.to_string(letter));
    cm.g.matrix.push_back(fit.row);
    cm.g.scalar.push_back(fit.scalar.scalar);
    cm.g.qexp.push_back(fit.scalar.qexp);
    cm.g.zero.push_back(false);

    // f: project modulo K.
    cm.f.source.push_back(shown.to_string(letter));
    for (const auto& d : z.denominator().factors)
      if (in_ideal(d.index, K))
        throw DenominatorInIdeal(d.index.to_string(letter) + " lies in " + K.to_string());
    if (product_in_ideal(z.numerator(), K, side)) {
      if (gen.invertible) throw NotMonomial("invertible generator " + z.to_string(letter) + " vanishes modulo K");
      cm.f.matrix.push_back(IntVector(tK.size(), 0));
      cm.f.scalar.push_back(0);
      cm.f.qexp.push_back(0);
      cm.f.zero.push_back(true);
      continue;
    }
    const detail::MonomialFit ff = detail::fit_monomial(z, tK, K, side);
    cm.f.matrix.push_back(ff.row);
    cm.f.scalar.push_back(ff.scalar.scalar);
    cm.f.qexp.push_back(ff.scalar.qexp);
    cm.f.zero.push_back(false);
  }
  return cm;
}

inline MonomialMap g_map(const HPrimeId& J, const HPrimeId& K, Side side = Side::Poisson) {
  return centre_maps(J, K, side).g;
}
inline MonomialMap f_map(const HPrimeId& J, const HPrimeId& K, Side side = Side::Poisson) {
  return centre_maps(J, K, side).f;
}

// ---------------------------------------------------------------------------
// Closed points
// ---------------------------------------------------------------------------

struct ClosedSetDesc {
  enum class Kind { Equations, Empty, Full };
  Kind kind = Kind::Equations;
  std::vector<std::string> coordinates;
  std::vector<std::pair<IntVector, ParamRational>> equations;

  std::string to_string() const {
    if (kind == Kind::Empty) return "EMPTY";
    if (kind == Kind::Full) return "FULL";
    std::string s = "{";
    for (std::size_t e = 0; e < equations.size(); ++e) {
      if (e) s += ", ";
      std::string lhs;
      for (std::size_t j = 0; j < equations[e].first.size(); ++j) {
        const auto x = equations[e].first[j];
        if (x == 0) continue;
        if (!lhs.empty()) lhs += "*";
        lhs += coordinates[j];
        if (x != 1) lhs += "^" + std::to_string(x);
      }
      s += (lhs.empty() ? "1" : lhs) + " = " + equations[e].second.to_string();
    }
    return s + "}";
  }
};

inline ParamRational monomial_value(const std::vector<ParamRational>& pt, const IntVector& row) {
  ParamRational v(1);
  for (std::size_t j = 0; j < row.size(); ++j)
    for (int k = 0; k < (row[j] < 0 ? -row[j] : row[j]); ++k) v = row[j] > 0 ? v * pt[j] : v / pt[j];
  return v;
}

/// f-preimage of the closure of the g-image of a closed point of stratum J.
inline ClosedSetDesc stratum_flow(const HPrimeId& J, const HPrimeId& K, const std::vector<ParamRational>& point) {
  const int dJ = hprime(J).rank();
  if (static_cast<int>(point.size()) != dJ)
    throw RankMismatch("stratum " + J.to_string() + " has rank " + std::to_string(dJ));
  for (const auto& x : point)
    if (x.is_zero()) throw Error("point coordinates must be nonzero");
  ClosedSetDesc out;
  for (const auto& t : table_generators(K)) out.coordinates.push_back(t.to_string());
  if (J == K) {
    for (int i = 0; i < dJ; ++i) {
      IntVector e(static_cast<std::size_t>(dJ), 0);
      e[static_cast<std::size_t>(i)] = 1;
      out.equations.emplace_back(e, point[static_cast<std::size_t>(i)]);
    }
    if (dJ == 0) out.kind = ClosedSetDesc::Kind::Full;
    return out;
  }
  const CentreMaps cm = centre_maps(J, K, Side::Poisson);
  if (cm.generators.empty()) {
    out.kind = ClosedSetDesc::Kind::Full;
    return out;
  }
  for (std::size_t i = 0; i < cm.generators.size(); ++i) {
    const ParamRational value = ParamRational(cm.g.scalar[i]) * monomial_value(point, cm.g.matrix[i]);
    if (cm.f.zero[i]) {
      out.kind = ClosedSetDesc::Kind::Empty;
      out.equations.clear();
      return out;
    }
    const ParamRational rhs = value / ParamRational(cm.f.scalar[i]);
    const bool trivial_row = std::all_of(cm.f.matrix[i].begin(), cm.f.matrix[i].end(), [](std::int64_t x) { return x == 0; });
    if (trivial_row && rhs.is_constant()) {
      if (rhs == ParamRational(1)) continue;
      out.kind = ClosedSetDesc::Kind::Empty;
      out.equations.clear();
      return out;
    }
    out.equations.emplace_back(cm.f.matrix[i], rhs);
  }
  if (out.equations.empty()) out.kind = ClosedSetDesc::Kind::Full;
  return out;
}

// ---------------------------------------------------------------------------
// Primitive ideals
// ---------------------------------------------------------------------------

struct PsiPair {
  std::vector<std::string> quantum;  // X-form U - l V
  std::vector<LambdaPoly> poisson;
};

inline PsiPair psi_primitive(const HPrimeId& id, const std::vector<ParamRational>& lambda) {
  PsiPair out;
  out.poisson = primitive_table(id, lambda);
  const auto& rec = hprime(id);
  for (std::size_t i = 0; i < rec.primitive_gens.size(); ++i) {
    const auto& p = rec.primitive_gens[i];
    using Tr = FieldTraits<ParamRational>;
    std::string l = lambda[i].to_string();
    if (Tr::needs_parens(lambda[i]) || Tr::prints_negative(lambda[i])) l = "(" + l + ")";
    out.quantum.push_back(p.U.to_string('X') + " - " + l + (p.V.is_one() ? "" : "*" + p.V.to_string('X')));
  }
  return out;
}

/// For each coordinate x outside J a single a with x U = q^a U x and
/// x V = q^a V x modulo J. Returns failures.
inline std::vector<CheckFailure> quantum_shadow_failures(const HPrimeId& J) {
  std::vector<CheckFailure> out;
  const Ambient amb = sl3();
  NCReducer& red = quantum_reducer(J);
  for (const auto& p : hprime(J).primitive_gens) {
    const NCPoly U = nc_value(p.U), V = nc_value(p.V);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        const MinorIndex x = MinorIndex::coordinate(i, j);
        if (in_ideal(x, J)) continue;
        const NCPoly X = NCPoly::generator(amb.var(i, j));
        const QCommutation a = q_commutation(X, U, amb, &red);
        const QCommutation b = p.V.is_one() ? QCommutation{0, false, ""} : q_commutation(X, V, amb, &red);
        if (!a.exponent || !b.exponent || *a.exponent != *b.exponent)
          out.push_back({J.to_string(), x.to_string('X') + " against " + p.U.to_string('X') + " / " +
                                            p.V.to_string('X') + ": " + a.reason + b.reason});
      }
  }
  return out;
}

}  // namespace strata
