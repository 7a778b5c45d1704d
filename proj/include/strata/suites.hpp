#pragma once

// Verification batteries behind `strata-kit run`.

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "strata/report.hpp"
#include "strata/stratum_maps.hpp"

namespace strata {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::pair<HPrimeId, HPrimeId>> pair;
  std::vector<ParamRational> lambda;
  std::optional<HPrimeId> quotient;
  bool timing = false;
  int random_inputs = 500;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations", "hprimes", "poset", "ore",  "centers",
                                                 "primitives", "cases",  "maps",  "psi", "all"};
  return names;
}

// ---------------------------------------------------------------------------
// Random inputs
// ---------------------------------------------------------------------------

/// Small random polynomial: up to `terms` monomials of degree <= `degree`
/// with integer coefficients in [-3, 3].
inline QPoly random_poly(std::mt19937_64& rng, const Ambient& amb, int terms = 3, int degree = 2) {
  std::uniform_int_distribution<int> nterms(1, terms), deg(0, degree), var(0, amb.nvars() - 1), coef(-3, 3);
  QPoly p;
  const int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    Monomial m;
    const int d = deg(rng);
    for (int e = 0; e < d; ++e) m = m * Monomial::var(var(rng));
    const int c = coef(rng);
    if (c != 0) p += QPoly::monomial(m, Rational(c));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Scope
// ---------------------------------------------------------------------------

/// H-primes in scope: all 36, or those containing the quotient ideal.
inline std::vector<HPrimeId> scope(const SuiteOptions& o) {
  if (!o.quotient) return all_hprimes();
  std::vector<HPrimeId> out;
  for (const auto& K : all_hprimes())
    if (contained(*o.quotient, K)) out.push_back(K);
  return out;
}

inline bool in_scope(const SuiteOptions& o, const HPrimeId& id) {
  return !o.quotient || contained(*o.quotient, id);
}

inline std::vector<std::pair<HPrimeId, HPrimeId>> scoped_pairs(const SuiteOptions& o) {
  if (o.pair) return {*o.pair};
  std::vector<std::pair<HPrimeId, HPrimeId>> out;
  for (const auto& [J, K] : comparable_pairs())
    if (in_scope(o, J) && in_scope(o, K)) out.emplace_back(J, K);
  return out;
}

inline std::string pair_name(const HPrimeId& J, const HPrimeId& K) { return J.to_string() + "->" + K.to_string(); }

inline std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

inline std::string labels_string(const std::vector<MinorProduct>& v, char letter = 'Y') {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(x.to_string(letter));
  return "{" + join(s) + "}";
}

inline std::string matrix_string(const IntMatrix& M) {
  std::string s = "[";
  for (std::size_t i = 0; i < M.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < M[i].size(); ++j) s += (j ? "," : "") + std::to_string(M[i][j]);
    s += "]";
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// relations
// ---------------------------------------------------------------------------

inline void run_relations(Report& r, const SuiteOptions& o) {
  const Ambient M3 = m3();
  const int N = o.random_inputs;
  const std::string seeded = std::to_string(N) + " random inputs, seed " + std::to_string(o.seed);
  r.check("relations.antisymmetry", [&] {
    std::mt19937_64 rng(o.seed);
    for (int k = 0; k < N; ++k) {
      const QPoly f = random_poly(rng, M3), g = random_poly(rng, M3);
      if (!(bracket(f, g, M3) + bracket(g, f, M3)).is_zero())
        return Outcome::fail("{f,g} + {g,f} != 0 for f = " + to_string(f, M3) + ", g = " + to_string(g, M3));
    }
    return Outcome::pass(seeded);
  });
  r.check("relations.jacobi", [&] {
    std::mt19937_64 rng(o.seed + 1);
    for (int k = 0; k < N; ++k) {
      const QPoly f = random_poly(rng, M3), g = random_poly(rng, M3), h = random_poly(rng, M3);
      const QPoly j = bracket(f, bracket(g, h, M3), M3) + bracket(g, bracket(h, f, M3), M3) +
                      bracket(h, bracket(f, g, M3), M3);
      if (!j.is_zero()) return Outcome::fail("Jacobi fails on " + to_string(f, M3) + ", " + to_string(g, M3) + ", " +
                                             to_string(h, M3));
    }
    return Outcome::pass(seeded);
  });
  r.check("relations.leibniz", [&] {
    std::mt19937_64 rng(o.seed + 2);
    for (int k = 0; k < N; ++k) {
      const QPoly f = random_poly(rng, M3), g = random_poly(rng, M3), h = random_poly(rng, M3);
      if (!(bracket(f, g * h, M3) - bracket(f, g, M3) * h - g * bracket(f, h, M3)).is_zero())
        return Outcome::fail("Leibniz fails on " + to_string(f, M3) + ", " + to_string(g, M3) + ", " +
                             to_string(h, M3));
    }
    return Outcome::pass(seeded);
  });
  r.check("relations.confluence", [&] {
    int n = 0;
    for (int a = 0; a < 9; ++a)
      for (int b = 0; b < 9; ++b)
        for (int c = 0; c < 9; ++c) {
          const std::vector<int> w = {a, b, c};
          const NCPoly left = naive_rewrite(w, M3, true), right = naive_rewrite(w, M3, false);
          const NCPoly eng = nc_normal_form(w, M3);
          if (!(left - right).is_zero() || !(left - eng).is_zero())
            return Outcome::fail("rewriting is not confluent on " + var_name(M3, a, 'X') + var_name(M3, b, 'X') +
                                 var_name(M3, c, 'X'));
          ++n;
        }
    return Outcome::pass(std::to_string(n) + " generator triples");
  });
  r.check("relations.semiclassical.generators", [&] {
    int n = 0;
    for (int a = 0; a < 9; ++a)
      for (int b = a + 1; b < 9; ++b) {
        const MinorIndex u = MinorIndex::coordinate(M3.row_of(a), M3.col_of(a));
        const MinorIndex v = MinorIndex::coordinate(M3.row_of(b), M3.col_of(b));
        if (!semiclassical_check(u, v, M3)) return Outcome::fail(u.to_string('X') + ", " + v.to_string('X'));
        ++n;
      }
    return Outcome::pass(std::to_string(n) + " unordered generator pairs");
  });
  r.check("relations.semiclassical.minors", [&] {
    int n = 0;
    for (int a = 0; a < 9; ++a)
      for (int r1 = 1; r1 <= 3; ++r1)
        for (int r2 = r1 + 1; r2 <= 3; ++r2)
          for (int c1 = 1; c1 <= 3; ++c1)
            for (int c2 = c1 + 1; c2 <= 3; ++c2) {
              const MinorIndex u = MinorIndex::coordinate(M3.row_of(a), M3.col_of(a));
              const MinorIndex v{{r1, r2}, {c1, c2}};
              if (!semiclassical_check(u, v, M3)) return Outcome::fail(u.to_string('X') + ", " + v.to_string('X'));
              ++n;
            }
    return Outcome::pass(std::to_string(n) + " (generator, 2x2 minor) pairs");
  });
  r.check("relations.centrality.poisson", [&] {
    const QPoly D = determinant(3);
    for (int v = 0; v < 9; ++v)
      if (!bracket(D, QPoly::variable(v), M3).is_zero()) return Outcome::fail("{D, " + var_name(M3, v) + "} != 0");
    return Outcome::pass("{D, Y_ij} = 0 for all 9 generators");
  });
  for (int m : {2, 3}) {
    r.check("relations.centrality.quantum.m" + std::to_string(m), [&, m] {
      const Ambient A{m, m, false};
      const NCPoly D = q_determinant(m);
      for (int v = 0; v < A.nvars(); ++v) {
        const NCPoly x = NCPoly::generator(v);
        if (!(nc_mul(D, x, A) - nc_mul(x, D, A)).is_zero())
          return Outcome::fail("D_q does not commute with " + var_name(A, v, 'X'));
      }
      return Outcome::pass("D_q X_ij = X_ij D_q for all " + std::to_string(A.nvars()) + " generators");
    });
  }
}

// ---------------------------------------------------------------------------
// hprimes
// ---------------------------------------------------------------------------

inline void run_hprimes(Report& r, const SuiteOptions& o) {
  const Ambient amb = sl3();
  for (const auto& id : scope(o)) {
    const auto& rec = hprime(id);
    r.check("hprimes." + id.to_string() + ".homogeneous", [&] {
      std::vector<std::string> degs;
      for (const auto& g : rec.ideal_gens) degs.push_back(degree_string(h_degree(minor(g, amb), amb), amb));
      return Outcome::pass(std::to_string(rec.ideal_gens.size()) + " generators, degrees {" + join(degs) + "}");
    });
    r.check("hprimes." + id.to_string() + ".poisson_closed", [&] {
      const auto& G = ideal_gb(id);
      for (const auto& g : rec.ideal_gens)
        for (int v = 0; v < 9; ++v)
          if (!member(bracket(minor(g, amb), QPoly::variable(v), amb), G))
            return Outcome::fail("{" + g.to_string() + ", " + var_name(amb, v) + "} is not in the ideal");
      return Outcome::pass("all generator brackets reduce to 0");
    });
    r.check("hprimes." + id.to_string() + ".proper", [&] {
      return Outcome::of(!member(QPoly(Rational(1)), ideal_gb(id)), "1 is not in the ideal");
    });
  }
  if (o.quotient) {
    const HPrimeId Q = *o.quotient;
    r.check("hprimes.quotient.determinant", [&] {
      // X11 maps to the inverse of the 2x2 determinant of the remaining block.
      const ExprAst lhs = parse_expr("X11*[23|23]", amb, 'X'), rhs = parse_expr("1", amb, 'X');
      const bool p = difference_in_ideal(lhs, rhs, Q, Side::Poisson);
      const bool q = difference_in_ideal(lhs, rhs, Q, Side::Quantum);
      return Outcome::of(p && q, "W11*[23|23] = 1 modulo " + Q.to_string() + " on both sides");
    });
    r.check("hprimes.quotient.coordinates", [&] {
      std::vector<std::string> zero, kept;
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          const MinorIndex x = MinorIndex::coordinate(i, j);
          (in_ideal(x, Q) ? zero : kept).push_back(x.to_string('W'));
        }
      return Outcome::pass("vanishing {" + join(zero) + "}, surviving {" + join(kept) + "}");
    });
  }
}

// ---------------------------------------------------------------------------
// poset
// ---------------------------------------------------------------------------

inline void run_poset(Report& r, const SuiteOptions& o) {
  const auto ids = scope(o);
  r.check("poset.size", [&] {
    // (132,132) has three H-primes above it.
    const std::size_t expect = !o.quotient ? 36 : *o.quotient == HPrimeId{"132", "132"} ? 4 : 1 + strictly_above(*o.quotient).size();
    return Outcome::of(ids.size() == expect, std::to_string(ids.size()) + " H-primes");
  });
  r.check("poset.order", [&] {
    const PosetReport p = poset_report();
    return Outcome::of(p.reflexive && p.antisymmetric && p.transitive, "reflexive, antisymmetric, transitive");
  });
  auto extremes = [&](bool lowest) {
    std::vector<HPrimeId> out;
    for (const auto& a : ids) {
      bool ok = true;
      for (const auto& b : ids)
        if (lowest ? !contained(a, b) : !contained(b, a)) ok = false;
      if (ok) out.push_back(a);
    }
    return out;
  };
  const HPrimeId expect_min = o.quotient ? *o.quotient : HPrimeId{"321", "321"};
  r.check("poset.minimum", [&] {
    const auto m = extremes(true);
    return Outcome::of(m.size() == 1 && m[0] == expect_min, m.size() == 1 ? m[0].to_string() : "not unique");
  });
  r.check("poset.maximum", [&] {
    const auto m = extremes(false);
    return Outcome::of(m.size() == 1 && m[0] == HPrimeId{"123", "123"}, m.size() == 1 ? m[0].to_string() : "not unique");
  });
  const std::vector<std::pair<std::string, std::size_t>> counts = {
      {"132,123", 1}, {"132,132", 3}, {"123,321", 5}, {"231,132", 7}, {"231,231", 15}, {"123,123", 0}};
  for (const auto& [s, n] : counts) {
    const HPrimeId id = HPrimeId::parse(s);
    if (!in_scope(o, id)) continue;
    r.check("poset.above." + id.to_string(), [&, id, n = n] {
      const std::size_t got = strictly_above(id).size();
      return Outcome::of(got == n, std::to_string(got) + " H-primes strictly above, expected " + std::to_string(n));
    });
  }
}

// ---------------------------------------------------------------------------
// ore
// ---------------------------------------------------------------------------

inline void run_ore(Report& r, const SuiteOptions& o) {
  const auto ids = scope(o);
  for (const auto& K : ids) {
    r.check("ore.disjoint." + K.to_string(), [&, K] {
      std::vector<std::string> e;
      for (const auto& g : ek(K)) {
        if (in_ideal(g, K)) return Outcome::fail(g.to_string('W') + " lies in K");
        e.push_back(g.to_string('W'));
      }
      return Outcome::pass("E_K = {" + join(e) + "}");
    });
  }
  r.check("ore.killing", [&] {
    const auto failures = killing_failures();
    int n = 0;
    for (const auto& K : ids)
      for (const auto& L : ids)
        if (!contained(L, K)) ++n;
    for (const auto& f : failures) {
      const auto cut = f.where.find(" vs ");
      const HPrimeId L = HPrimeId::parse(f.where.substr(0, cut)), K = HPrimeId::parse(f.where.substr(cut + 4));
      if (in_scope(o, L) && in_scope(o, K)) return Outcome::fail(f.where + ": " + f.detail);
    }
    return Outcome::pass(std::to_string(n) + " ordered pairs with L not in K");
  });
  r.check("ore.tau_symmetry", [&] {
    const auto f = tau_symmetry_failures();
    return Outcome::of(f.empty(), f.empty() ? "tau(I_w) and tau(E_w) match the transposed index" : f[0].where + ": " + f[0].detail);
  });
}

// ---------------------------------------------------------------------------
// centers
// ---------------------------------------------------------------------------

inline bool unimodular(const IntMatrix& M) {
  if (M.empty()) return true;
  if (M.size() == 1) return M[0].size() == 1 && (M[0][0] == 1 || M[0][0] == -1);
  if (M.size() == 2 && M[0].size() == 2) {
    const auto d = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    return d == 1 || d == -1;
  }
  return false;
}

inline void run_centers(Report& r, const SuiteOptions& o) {
  const Ambient amb = sl3();
  for (const auto& id : scope(o)) {
    const auto& rec = hprime(id);
    const std::string base = "centers." + id.to_string();
    r.check(base + ".central", [&] {
      for (const auto& z : rec.center_gens)
        if (!is_poisson_central_fraction(z, ideal_gb(id), amb)) return Outcome::fail(z.to_string() + " is not central");
      return Outcome::pass(rec.center_gens.empty() ? "blank entry" : labels_string(rec.center_gens));
    });
    r.check(base + ".denominators_normal", [&] {
      std::vector<QPoly> J;
      for (const auto& g : rec.ideal_gens) J.push_back(minor(g, amb));
      std::vector<std::string> dens;
      for (const auto& z : rec.center_gens) {
        const MinorProduct V = z.denominator();
        if (V.is_one()) continue;
        if (!is_poisson_normal_mod(expand_product(V, amb), J, amb))
          return Outcome::fail(V.to_string() + " is not Poisson-normal");
        dens.push_back(V.to_string());
      }
      return Outcome::pass(dens.empty() ? "no denominators" : "normal: {" + join(dens) + "}");
    });
    r.check(base + ".presentation", [&] {
      // The chart of R_J itself has centre matching the centre table on both sides.
      const CentreMaps p = centre_maps(id, id, Side::Poisson);
      const bool blank = rec.center_gens.empty();
      if (blank != p.generators.empty())
        return Outcome::fail("table rank " + std::to_string(rec.rank()) + ", derived rank " +
                             std::to_string(p.generators.size()));
      for (const auto& g : p.pz.centre.generators)
        if (!g.invertible) return Outcome::fail("derived centre is not a Laurent ring");
      if (!unimodular(p.g.matrix)) return Outcome::fail("change of generators " + matrix_string(p.g.matrix) + " is not unimodular");
      const CentreMaps q = centre_maps(id, id, Side::Quantum);
      if (q.g.matrix != p.g.matrix || q.generators != p.generators)
        return Outcome::inconclusive("quantum presentation differs");
      return Outcome::pass(blank ? "trivial centre" : "derived " + labels_string(p.generators) + " ~ table via " +
                                                          matrix_string(p.g.matrix));
    }, true);
  }
}

// ---------------------------------------------------------------------------
// primitives
// ---------------------------------------------------------------------------

inline void run_primitives(Report& r, const SuiteOptions& o) {
  const Ambient amb = sl3();
  for (const auto& id : scope(o)) {
    const auto& rec = hprime(id);
    const std::string base = "primitives." + id.to_string();
    r.check(base + ".normal", [&] {
      if (rec.primitive_gens.empty()) return Outcome::pass("rank 0: the primitive ideal is I_w");
      std::vector<LambdaPoly> J;
      for (const auto& g : rec.ideal_gens) J.push_back(to_lambda(minor(g, amb)));
      const auto gens = primitive_table(id, symbolic_lambda(rec.rank()));
      std::vector<std::string> shown;
      for (const auto& f : gens) {
        if (!is_poisson_normal_mod(f, J, amb)) return Outcome::fail(to_string(f, amb) + " is not Poisson-normal");
        shown.push_back(to_string(f, amb));
      }
      return Outcome::pass("normal over Q(l): {" + join(shown) + "}");
    });
    r.check(base + ".quantum_shadow", [&] {
      if (rec.primitive_gens.empty()) return Outcome::pass("rank 0");
      const auto f = quantum_shadow_failures(id);
      if (!f.empty()) return Outcome::inconclusive(f[0].detail);
      return Outcome::pass("every surviving X_ij q-commutes with U and V by a common power");
    }, true);
  }
}

// ---------------------------------------------------------------------------
// cases
// ---------------------------------------------------------------------------

inline std::string chart_string(const LocalizedPresentation& P) {
  std::vector<std::string> g;
  for (std::size_t i = 0; i < P.generators.size(); ++i)
    g.push_back(P.generators[i].to_string('W') + (P.inverted[i] ? "^+-1" : ""));
  return "{" + join(g) + "}";
}

inline void run_cases(Report& r, const SuiteOptions& o) {
  for (const auto& [J, K] : scoped_pairs(o)) {
    r.check("cases." + pair_name(J, K), [&, J = J, K = K] {
      CentreMaps p;
      try {
        p = centre_maps(J, K, Side::Poisson);
      } catch (const std::exception& e) {
        return Outcome::fail(std::string("poisson side: ") + e.what());
      }
      const CentreMaps q = centre_maps(J, K, Side::Quantum);
      if (!compatible(q.pz.skew, p.pz.skew)) return Outcome::fail("skew matrices differ");
      if (q.generators != p.generators) return Outcome::fail("centre generators differ under theta");
      for (std::size_t i = 0; i < p.pz.centre.generators.size(); ++i)
        if (p.pz.centre.generators[i].invertible != q.pz.centre.generators[i].invertible)
          return Outcome::fail("invertibility differs");
      std::string w = "case " + p.pz.presentation.case_label + ", chart " + chart_string(p.pz.presentation) + ", " +
                      std::to_string(p.pz.presentation.identities.size()) + " identities, centre " +
                      (p.display.empty() ? "k" : labels_string(p.display));
      if (!p.pz.auxiliary_free) w += " (restricted to auxiliary exponent 0)";
      return Outcome::pass(w);
    }, true);
  }
  if (o.pair) return;
  const HPrimeId zero{"321", "321"};
  if (in_scope(o, HPrimeId::parse("231,321"))) {
    r.check("cases.named.case_vii", [&] {
      const HPrimeId J = HPrimeId::parse("231,321"), K = HPrimeId::parse("231,213");
      const MinorProduct expect = parse_minor_product("Y13*Y21^-1*Y32^-1", sl3());
      for (Side s : {Side::Poisson, Side::Quantum}) {
        const CentreMaps c = centre_maps(J, K, s);
        if (c.generators.size() != 1) return Outcome::fail("rank " + std::to_string(c.generators.size()));
        const MinorProduct z = c.generators[0];
        if (z != expect && z != expect.inverse()) return Outcome::fail("centre generator " + z.to_string());
      }
      return Outcome::pass("Z_JK = PZ_JK = k[W13*W21^-1*W32^-1]");
    }, true);
  }
  if (in_scope(o, HPrimeId::parse("132,123"))) {
    r.check("cases.named.case_ii_matrix", [&] {
      const HPrimeId J = HPrimeId::parse("132,123");
      const std::vector<MinorIndex> gens = {MinorIndex::coordinate(2, 2), MinorIndex::coordinate(3, 2),
                                            MinorIndex::coordinate(3, 3)};
      const IntMatrix expect = {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
      const IntMatrix p = chart_matrix(J, gens, Side::Poisson), q = chart_matrix(J, gens, Side::Quantum);
      const LocalizedPresentation P = localized_presentation(J, HPrimeId::parse("123,123"), Side::Poisson);
      return Outcome::of(p == expect && q == expect,
                         "(W22, W32, W33): " + matrix_string(p) + " on both sides; chart " + chart_string(P));
    }, true);
  }
  if (!o.quotient) {
    r.check("cases.named.trivial_centres", [&] {
      std::vector<std::string> ks;
      for (const char* s : {"132,132", "213,213", "132,123", "213,123", "123,123", "123,132", "123,213"}) {
        const HPrimeId K = HPrimeId::parse(s);
        for (Side side : {Side::Poisson, Side::Quantum})
          if (!pz_jk(zero, K, side).centre.trivial())
            return Outcome::fail("J = 0, K = " + K.to_string() + " has nontrivial centre");
        ks.push_back(K.to_string());
      }
      return Outcome::pass("J = 0: centre k for K in {" + join(ks) + "}");
    }, true);
  }
}

// ---------------------------------------------------------------------------
// maps
// ---------------------------------------------------------------------------

inline std::string point_string(const std::vector<ParamRational>& pt) {
  std::vector<std::string> s;
  for (const auto& x : pt) s.push_back(x.to_string());
  return "(" + join(s) + ")";
}

inline void run_maps(Report& r, const SuiteOptions& o) {
  for (const auto& [J, K] : scoped_pairs(o)) {
    if (hprime(J).rank() == 0 && !o.pair) continue;
    r.check("maps." + pair_name(J, K), [&, J = J, K = K] {
      CentreMaps p;
      try {
        p = centre_maps(J, K, Side::Poisson);
      } catch (const std::exception& e) {
        return Outcome::fail(std::string("poisson side: ") + e.what());
      }
      if (p.generators.empty()) return Outcome::pass("trivial PZ_JK: empty maps");
      const CentreMaps q = centre_maps(J, K, Side::Quantum);
      if (q.g.matrix != p.g.matrix) return Outcome::fail("g differs: " + matrix_string(q.g.matrix) + " vs " + matrix_string(p.g.matrix));
      if (q.f.matrix != p.f.matrix || q.f.zero != p.f.zero)
        return Outcome::fail("f differs: " + matrix_string(q.f.matrix) + " vs " + matrix_string(p.f.matrix));
      return Outcome::pass("PZ_JK " + labels_string(p.display) + ", g " + matrix_string(p.g.matrix) + ", f " +
                           matrix_string(p.f.matrix));
    }, true);
  }
  const HPrimeId J = HPrimeId::parse("132,132"), K = HPrimeId::parse("123,123");
  if (!o.pair && in_scope(o, J)) {
    r.check("maps.flow.(132,132)->(123,123)", [&] {
      const auto pt = symbolic_lambda(2);
      const ClosedSetDesc c = stratum_flow(J, K, pt);
      const bool ok = c.kind == ClosedSetDesc::Kind::Equations && c.equations.size() == 1 &&
                      c.equations[0].first == IntVector{1, 0} && c.equations[0].second == pt[0];
      return Outcome::of(ok, c.to_string());
    });
  }
  if (o.pair && !o.lambda.empty()) {
    const auto [PJ, PK] = *o.pair;
    r.check("maps.flow." + pair_name(PJ, PK), [&, PJ = PJ, PK = PK] {
      std::vector<ParamRational> pt(o.lambda.begin(),
                                    o.lambda.begin() + std::min<std::ptrdiff_t>(hprime(PJ).rank(), static_cast<std::ptrdiff_t>(o.lambda.size())));
      return Outcome::pass(point_string(pt) + " |-> " + stratum_flow(PJ, PK, pt).to_string());
    });
  }
}

// ---------------------------------------------------------------------------
// psi
// ---------------------------------------------------------------------------

inline void run_psi(Report& r, const SuiteOptions& o) {
  const Ambient amb = sl3();
  std::vector<ParamRational> lambda = o.lambda;
  if (lambda.empty()) lambda = {ParamRational(2), ParamRational(3)};
  std::vector<HPrimeId> ids = o.pair ? std::vector<HPrimeId>{o.pair->first} : scope(o);
  for (const auto& id : ids) {
    r.check("psi." + id.to_string(), [&, id] {
      const int d = hprime(id).rank();
      if (static_cast<int>(lambda.size()) < d) throw RankMismatch("stratum " + id.to_string() + " needs " + std::to_string(d) + " parameters");
      const std::vector<ParamRational> l(lambda.begin(), lambda.begin() + d);
      const PsiPair p = psi_primitive(id, l);
      if (d == 0) return Outcome::pass("rank 0: psi(I_w) = I_w");
      std::vector<std::string> ps;
      for (std::size_t i = 0; i < p.poisson.size(); ++i) {
        const auto& pr = hprime(id).primitive_gens[i];
        const LambdaPoly expect =
            expand_product<ParamRational>(pr.U, amb) - expand_product<ParamRational>(pr.V, amb).scaled(l[i]);
        if (!(expect - p.poisson[i]).is_zero()) return Outcome::fail("theta mismatch on row " + std::to_string(i + 1));
        ps.push_back(to_string(p.poisson[i], amb));
      }
      return Outcome::pass("quantum {" + join(p.quantum) + "} <-> Poisson {" + join(ps) + "}");
    });
  }
}

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

inline Report run_suite(const std::string& name, const SuiteOptions& o) {
  bool known = false;
  for (const auto& n : suite_names()) known = known || n == name;
  if (!known) throw Error("unknown suite '" + name + "'");
  Report r(name, o.seed, o.timing);
  const bool all = name == "all";
  if (all || name == "relations") run_relations(r, o);
  if (all || name == "hprimes") run_hprimes(r, o);
  if (all || name == "poset") run_poset(r, o);
  if (all || name == "ore") run_ore(r, o);
  if (all || name == "centers") run_centers(r, o);
  if (all || name == "primitives") run_primitives(r, o);
  if (all || name == "cases") run_cases(r, o);
  if (all || name == "maps") run_maps(r, o);
  if (all || name == "psi") run_psi(r, o);
  return r;
}

inline std::vector<ParamRational> parse_lambda(const std::string& text) {
  std::vector<ParamRational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const ExprAst a = parse_expr(item, sl3());
    const auto p = eval_poisson<ParamRational>(a, sl3());
    if (!p.is_zero() && p.terms().size() == 1 && p.terms()[0].mono == Monomial{}) out.push_back(p.terms()[0].coeff);
    else throw SyntaxError("lambda entries must be scalars: '" + item + "'", 0);
    if (out.back().is_zero()) throw Error("lambda entries must be nonzero");
  }
  return out;
}

}  // namespace strata
