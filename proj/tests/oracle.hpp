#pragma once

// Independent reference computations used by several test files.

#include <optional>
#include <vector>

#include "strata/strata_kit.hpp"

namespace oracle {

using strata::Ambient;
using strata::QPoly;
using strata::Rational;

inline int sgn(int x) { return (x > 0) - (x < 0); }

/// {Y_ij, Y_kl} = (sgn(k - i) + sgn(l - j)) Y_il Y_kj.
inline QPoly generator_bracket(int a, int b, const Ambient& amb) {
  const int i = amb.row_of(a), j = amb.col_of(a), k = amb.row_of(b), l = amb.col_of(b);
  const int c = sgn(k - i) + sgn(l - j);
  if (a == b || c == 0) return {};
  return QPoly::variable(amb.var(i, l)) * QPoly::variable(amb.var(k, j)) * QPoly(Rational(c));
}

inline QPoly bracket(const QPoly& f, const QPoly& g, const Ambient& amb) {
  QPoly out;
  for (int a = 0; a < amb.nvars(); ++a)
    for (int b = 0; b < amb.nvars(); ++b) {
      const QPoly fa = f.derivative(a), gb = g.derivative(b);
      if (fa.is_zero() || gb.is_zero()) continue;
      out += fa * gb * generator_bracket(a, b, amb);
    }
  return out;
}

/// Leibniz expansion of a minor, independent of the library's permutation walk.
inline QPoly minor(const std::vector<int>& rows, const std::vector<int>& cols, const Ambient& amb) {
  if (rows.size() == 1) return QPoly::variable(amb.var(rows[0], cols[0]));
  QPoly out;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<int> r(rows.begin() + 1, rows.end()), c;
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (t != k) c.push_back(cols[t]);
    const QPoly term = QPoly::variable(amb.var(rows[0], cols[k])) * minor(r, c, amb);
    if (k % 2 == 0) out += term;
    else out -= term;
  }
  return out;
}

/// Solve A x = b over Q by Gaussian elimination; A is given by columns.
inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> cols, std::vector<Rational> b) {
  const std::size_t n = cols.size(), m = b.size();
  std::vector<std::vector<Rational>> M(m, std::vector<Rational>(n + 1, 0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) M[r][c] = cols[c][r];
    M[r][n] = b[r];
  }
  std::size_t row = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t p = row;
    while (p < m && M[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[row]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || M[r][c] == 0) continue;
      const Rational f = M[r][c] / M[row][c];
      for (std::size_t t = c; t <= n; ++t) M[r][t] -= f * M[row][t];
    }
    piv.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (M[r][n] != 0) return std::nullopt;
  std::vector<Rational> x(n, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = M[r][n] / M[r][piv[r]];
  return x;
}

/// Coefficient vectors of a list of polynomials over their joint support.
inline std::vector<std::vector<Rational>> coefficient_columns(const std::vector<QPoly>& ps,
                                                              std::vector<strata::Monomial>& support) {
  for (const auto& p : ps)
    for (const auto& t : p.terms())
      if (std::find(support.begin(), support.end(), t.mono) == support.end()) support.push_back(t.mono);
  std::vector<std::vector<Rational>> out;
  for (const auto& p : ps) {
    std::vector<Rational> v(support.size(), 0);
    for (const auto& t : p.terms())
      v[static_cast<std::size_t>(std::find(support.begin(), support.end(), t.mono) - support.begin())] = t.coeff;
    out.push_back(v);
  }
  return out;
}

/// Brute-force normality: for each generator y find a cofactor c in
/// span{1, Y_ab} with {f, y} - c f reducing to 0 modulo J (a Groebner basis).
inline bool normal_by_cofactors(const QPoly& f, const strata::GroebnerBasis<Rational>& J, const Ambient& amb) {
  std::vector<QPoly> basis{strata::normal_form(f, J)};
  for (int v = 0; v < amb.nvars(); ++v) basis.push_back(strata::normal_form(QPoly::variable(v) * f, J));
  for (int v = 0; v < amb.nvars(); ++v) {
    const QPoly target = strata::normal_form(bracket(f, QPoly::variable(v), amb), J);
    std::vector<QPoly> all = basis;
    all.push_back(target);
    std::vector<strata::Monomial> support;
    auto cols = coefficient_columns(all, support);
    const auto rhs = cols.back();
    cols.pop_back();
    if (!solve(cols, rhs)) return false;
  }
  return true;
}

}  // namespace oracle
