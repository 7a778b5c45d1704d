#pragma once

// Skew-commuting affine/Laurent algebras: integer kernels via Hermite normal
// form, central monomial monoids, derivation of skew matrices from concrete
// generators, and compatibility of quantum and Poisson presentations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "strata/comm_poly.hpp"
#include "strata/error.hpp"
#include "strata/groebner.hpp"
#include "strata/labels.hpp"
#include "strata/poisson.hpp"
#include "strata/quantum.hpp"

namespace strata {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using IntVector = std::vector<std::int64_t>;

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in lattice computation");
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in lattice computation");
  return r;
}

/// row_a <- x*row_a + y*row_b, row_b <- u*row_a + v*row_b (simultaneous).
inline void combine_rows(IntVector& a, IntVector& b, std::int64_t x, std::int64_t y, std::int64_t u, std::int64_t v) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::int64_t na = checked_add(checked_mul(x, a[k]), checked_mul(y, b[k]));
    const std::int64_t nb = checked_add(checked_mul(u, a[k]), checked_mul(v, b[k]));
    a[k] = na;
    b[k] = nb;
  }
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g >= 0.
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> xgcd(std::int64_t a, std::int64_t b) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

}  // namespace detail

/// Row Hermite normal form; zero rows are dropped. Pivots are positive and
/// entries above each pivot lie in [0, pivot).
inline IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c] == 0) continue;
      const std::int64_t a = rows[r][c], b = rows[k][c];
      if (a == 0) {
        std::swap(rows[r], rows[k]);
        continue;
      }
      auto [g, s, t] = detail::xgcd(a, b);
      detail::combine_rows(rows[r], rows[k], s, t, -b / g, a / g);
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t k = 0; k < r; ++k) {
      const std::int64_t f = detail::floor_div(rows[k][c], rows[r][c]);
      if (f != 0)
        for (std::size_t j = 0; j < ncols; ++j) rows[k][j] = detail::checked_add(rows[k][j], -detail::checked_mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return rows;
}

/// Basis of the integer null space {m : A m = 0}, in Hermite normal form
/// (hence first nonzero entry of each vector positive).
inline IntMatrix kernel_lattice(const IntMatrix& A, std::size_t ncols) {
  // Row-reduce [A^T | I]; rows whose A^T part vanishes give kernel vectors.
  const std::size_t nrows = A.size();
  IntMatrix aug(ncols, IntVector(nrows + ncols, 0));
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < nrows; ++i) aug[j][i] = A[i][j];
    aug[j][nrows + j] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < nrows && r < ncols; ++c) {
    for (std::size_t k = r + 1; k < ncols; ++k) {
      if (aug[k][c] == 0) continue;
      const std::int64_t a = aug[r][c], b = aug[k][c];
      if (a == 0) {
        std::swap(aug[r], aug[k]);
        continue;
      }
      auto [g, s, t] = detail::xgcd(a, b);
      detail::combine_rows(aug[r], aug[k], s, t, -b / g, a / g);
    }
    if (aug[r][c] != 0) ++r;
  }
  IntMatrix ker;
  for (std::size_t k = r; k < ncols; ++k) ker.emplace_back(aug[k].begin() + static_cast<std::ptrdiff_t>(nrows), aug[k].end());
  return hermite_normal_form(std::move(ker));
}

inline IntMatrix kernel_lattice(const IntMatrix& A) { return kernel_lattice(A, A.empty() ? 0 : A[0].size()); }

// ---------------------------------------------------------------------------
// Skew algebras and their centers
// ---------------------------------------------------------------------------

struct SkewAlgebra {
  int n = 0;
  std::vector<bool> inverted;
  IntMatrix matrix;
  std::vector<MinorProduct> labels;

  void check() const {
    if (static_cast<int>(matrix.size()) != n || static_cast<int>(inverted.size()) != n ||
        static_cast<int>(labels.size()) != n)
      throw Error("skew algebra dimensions disagree");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (matrix[i][j] != -matrix[j][i]) throw Error("matrix is not skew-symmetric");
  }
};

inline MinorProduct pow(const MinorProduct& u, int e) {
  MinorProduct r;
  const MinorProduct base = e < 0 ? u.inverse() : u;
  for (int k = 0; k < (e < 0 ? -e : e); ++k) r = r * base;
  return r;
}

/// Laurent monomial prod labels[i]^m[i] in variable order.
inline MinorProduct monomial_label(const std::vector<MinorProduct>& labels, const IntVector& m) {
  MinorProduct r;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) r = r * pow(labels[i], static_cast<int>(m[i]));
  return r;
}

struct CenterGenerator {
  IntVector exponents;
  bool invertible = false;
  MinorProduct label;
};

struct CenterPresentation {
  std::vector<CenterGenerator> generators;

  bool trivial() const { return generators.empty(); }
  std::size_t rank() const { return generators.size(); }
};

namespace detail {

/// Reduce v modulo the rows of an HNF basis (entries at pivots into [0, pivot)).
inline IntVector reduce_mod_hnf(IntVector v, const IntMatrix& H) {
  for (const auto& row : H) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    const std::int64_t f = floor_div(v[p], row[p]);
    if (f != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = checked_add(v[j], -checked_mul(f, row[j]));
  }
  return v;
}

inline bool nonneg_on(const IntVector& v, const std::vector<std::size_t>& idx) {
  return std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return v[i] >= 0; });
}

}  // namespace detail

/// Generators of the monoid {m in ker A : m_i >= 0 for uninverted i}: a basis
/// of the unit lattice (support on inverted coordinates) plus the Hilbert
/// basis of the constrained part, searched in the box of exponents <= 6.
/// Extra linear constraints (e.g. vanishing on auxiliary coordinates) may be
/// appended to the matrix.
inline CenterPresentation central_monomials(const SkewAlgebra& S, const IntMatrix& extra_constraints = {}) {
  S.check();
  const std::size_t n = static_cast<std::size_t>(S.n);
  IntMatrix A = S.matrix;
  for (const auto& row : extra_constraints) A.push_back(row);
  const IntMatrix L = kernel_lattice(A, n);

  std::vector<std::size_t> cons;
  for (std::size_t i = 0; i < n; ++i)
    if (!S.inverted[i]) cons.push_back(i);

  // Unit lattice: combinations of L vanishing on constrained coordinates.
  IntMatrix proj_t(cons.size(), IntVector(L.size(), 0));
  for (std::size_t a = 0; a < cons.size(); ++a)
    for (std::size_t b = 0; b < L.size(); ++b) proj_t[a][b] = L[b][cons[a]];
  const IntMatrix coeffs = kernel_lattice(proj_t, L.size());
  IntMatrix units;
  for (const auto& c : coeffs) {
    IntVector v(n, 0);
    for (std::size_t b = 0; b < L.size(); ++b)
      for (std::size_t j = 0; j < n; ++j) v[j] = detail::checked_add(v[j], detail::checked_mul(c[b], L[b][j]));
    units.push_back(v);
  }
  units = hermite_normal_form(std::move(units));

  // Constrained part: HNF of the projection, lifted through L.
  IntMatrix aug;
  for (const auto& row : L) {
    IntVector r;
    for (std::size_t i : cons) r.push_back(row[i]);
    r.insert(r.end(), row.begin(), row.end());
    aug.push_back(r);
  }
  aug = hermite_normal_form(std::move(aug));
  IntMatrix P;  // rows: projection part followed by a lift
  for (const auto& row : aug) {
    const bool nonzero = std::any_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(cons.size()),
                                     [](std::int64_t x) { return x != 0; });
    if (nonzero) P.push_back(row);
  }
  if (P.size() > 2) throw Error("constrained central monoid has rank " + std::to_string(P.size()) + " > 2");

  std::vector<std::size_t> piv;
  for (const auto& row : P) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    piv.push_back(p);
  }
  constexpr std::int64_t kBox = 6;
  std::vector<IntVector> found;  // full rows (projection + lift)
  std::vector<std::int64_t> target(P.size(), 0);
  auto enumerate = [&](auto&& self, std::size_t k, IntVector acc) -> void {
    if (k == P.size()) {
      bool zero = true;
      for (std::size_t a = 0; a < cons.size(); ++a) {
        if (acc[a] < 0) return;
        if (acc[a] != 0) zero = false;
      }
      if (!zero) found.push_back(acc);
      return;
    }
    for (std::int64_t t = 0; t <= kBox; ++t) {
      const std::int64_t rem = t - acc[piv[k]];
      if (rem % P[k][piv[k]] != 0) continue;
      const std::int64_t c = rem / P[k][piv[k]];
      IntVector next = acc;
      for (std::size_t j = 0; j < next.size(); ++j) next[j] = detail::checked_add(next[j], detail::checked_mul(c, P[k][j]));
      self(self, k + 1, next);
    }
  };
  if (!P.empty()) enumerate(enumerate, 0, IntVector(cons.size() + n, 0));

  auto proj_of = [&](const IntVector& v) { return IntVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(cons.size())); };
  std::vector<IntVector> hilbert;
  for (const auto& v : found) {
    const IntVector pv = proj_of(v);
    bool reducible = false;
    for (const auto& w : found) {
      const IntVector pw = proj_of(w);
      if (pw == pv) continue;
      bool le = true;
      for (std::size_t a = 0; a < pv.size(); ++a)
        if (pw[a] > pv[a]) le = false;
      if (le) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hilbert.push_back(v);
  }
  std::sort(hilbert.begin(), hilbert.end());
  hilbert.erase(std::unique(hilbert.begin(), hilbert.end(), [&](const IntVector& a, const IntVector& b) {
                  return proj_of(a) == proj_of(b);
                }),
                hilbert.end());

  CenterPresentation out;
  for (const auto& u : units) out.generators.push_back({u, true, monomial_label(S.labels, u)});
  for (const auto& h : hilbert) {
    IntVector lift(h.begin() + static_cast<std::ptrdiff_t>(cons.size()), h.end());
    lift = detail::reduce_mod_hnf(lift, units);
    out.generators.push_back({lift, false, monomial_label(S.labels, lift)});
  }
  return out;
}

/// True iff every vector of the kernel lattice vanishes on `coords`.
inline bool kernel_avoids(const SkewAlgebra& S, const std::vector<int>& coords) {
  const IntMatrix L = kernel_lattice(S.matrix, static_cast<std::size_t>(S.n));
  for (const auto& v : L)
    for (int c : coords)
      if (v[static_cast<std::size_t>(c)] != 0) return false;
  return true;
}

inline bool is_central_exponent(const SkewAlgebra& S, const IntVector& m) {
  for (int i = 0; i < S.n; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < S.n; ++j) s += S.matrix[i][j] * m[static_cast<std::size_t>(j)];
    if (s != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Deriving skew matrices from concrete generators
// ---------------------------------------------------------------------------

enum class Side { Quantum, Poisson };

inline std::string side_name(Side s) { return s == Side::Quantum ? "quantum" : "poisson"; }

/// Quantum reducer for the two-sided ideal generated by quantum minors `J`
/// (with D_q - 1 adjoined when the ambient is special).
inline NCReducer quantum_ideal(const std::vector<MinorIndex>& J, const Ambient& amb) {
  std::vector<NCPoly> gens;
  for (const auto& g : J) gens.push_back(q_minor(g, amb));
  if (amb.special) gens.push_back(q_determinant(amb.m) - NCPoly(QLaurent(1)));
  return NCReducer(std::move(gens), amb);
}

/// The integer c with {u, v} = c*u*v modulo G, if it exists.
inline std::optional<int> log_commutation(const QPoly& u, const QPoly& v, const GroebnerBasis<Rational>& G,
                                          const Ambient& amb) {
  const QPoly uv = normal_form(u * v, G);
  const QPoly br = normal_form(bracket(u, v, amb), G);
  if (uv.is_zero()) return std::nullopt;
  if (br.is_zero()) return 0;
  const Rational c = br.lc() / uv.lc();
  if (c.get_den() != 1 || !c.get_num().fits_sint_p()) return std::nullopt;
  if (!(br - uv.scaled(c)).is_zero()) return std::nullopt;
  return static_cast<int>(c.get_num().get_si());
}

/// Skew matrix of polynomial generators (products of minors) modulo J.
inline SkewAlgebra derive_skew(const std::vector<MinorProduct>& gens, const std::vector<bool>& inverted, Side side,
                               const std::vector<MinorIndex>& J, const Ambient& amb) {
  SkewAlgebra S;
  S.n = static_cast<int>(gens.size());
  S.inverted = inverted;
  S.labels = gens;
  S.matrix.assign(gens.size(), IntVector(gens.size(), 0));
  if (side == Side::Quantum) {
    NCReducer red = quantum_ideal(J, amb);
    std::vector<NCPoly> q;
    for (const auto& g : gens) q.push_back(nc_expand_product(g, amb));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        QCommutation r = q_commutation(q[i], q[j], amb, &red);
        if (!r.exponent)
          throw NotQCommuting(gens[i].to_string('X') + ", " + gens[j].to_string('X') + ": " +
                              (r.inconclusive ? "inconclusive: " : "") + r.reason);
        S.matrix[i][j] = *r.exponent;
        S.matrix[j][i] = -*r.exponent;
      }
  } else {
    const GroebnerBasis<Rational> G = ideal_basis(J, amb);
    std::vector<QPoly> p;
    for (const auto& g : gens) p.push_back(expand_product(g, amb));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        auto c = log_commutation(p[i], p[j], G, amb);
        if (!c) throw NotLogCommuting(gens[i].to_string() + ", " + gens[j].to_string());
        S.matrix[i][j] = *c;
        S.matrix[j][i] = -*c;
      }
  }
  return S;
}

namespace detail {
inline bool label_less(const MinorProduct& a, const MinorProduct& b) {
  return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
                                      [](const MinorFactor& x, const MinorFactor& y) {
                                        if (x.index != y.index) return x.index < y.index;
                                        return x.exponent < y.exponent;
                                      });
}
}  // namespace detail

/// Equal after sorting both generator lists canonically by label.
inline bool compatible(const SkewAlgebra& a, const SkewAlgebra& b) {
  if (a.n != b.n) return false;
  auto order = [](const SkewAlgebra& s) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(s.n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t x, std::size_t y) { return detail::label_less(s.labels[x], s.labels[y]); });
    return idx;
  };
  const auto ia = order(a), ib = order(b);
  for (std::size_t x = 0; x < ia.size(); ++x) {
    if (a.labels[ia[x]] != b.labels[ib[x]] || a.inverted[ia[x]] != b.inverted[ib[x]]) return false;
    for (std::size_t y = 0; y < ia.size(); ++y)
      if (a.matrix[ia[x]][ia[y]] != b.matrix[ib[x]][ib[y]]) return false;
  }
  return true;
}

}  // namespace strata
