#pragma once

// The semiclassical Poisson bracket on O(M_{m,p}), minors, torus degrees,
// transpose, and bracket formulas on quotients and localizations.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "strata/comm_poly.hpp"
#include "strata/groebner.hpp"
#include "strata/labels.hpp"

namespace strata {

/// {Y_a, Y_b} on coordinate functions by the rectangle rule.
template <class F = Rational>
CommPoly<F> generator_bracket(int a, int b, const Ambient& amb) {
  using Tr = FieldTraits<F>;
  const int i = amb.row_of(a), j = amb.col_of(a), k = amb.row_of(b), l = amb.col_of(b);
  auto prod = [&](int x, int y, long c) {
    return CommPoly<F>::monomial(Monomial::var(x) * Monomial::var(y), Tr::from(Rational(c)));
  };
  if (a == b) return {};
  if (i == k) return prod(a, b, j < l ? 1 : -1);
  if (j == l) return prod(a, b, i < k ? 1 : -1);
  if (i < k && j > l) return {};
  if (i > k && j < l) return {};
  if (i < k) return prod(amb.var(i, l), amb.var(k, j), 2);
  return prod(amb.var(k, j), amb.var(i, l), -2);
}

/// Biderivation extension: sum over variables of df/dy_a * dg/dy_b * {y_a, y_b}.
template <class F>
CommPoly<F> bracket(const CommPoly<F>& f, const CommPoly<F>& g, const Ambient& amb) {
  const int n = amb.nvars();
  std::vector<CommPoly<F>> df(static_cast<std::size_t>(n)), dg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    df[static_cast<std::size_t>(v)] = f.derivative(v);
    dg[static_cast<std::size_t>(v)] = g.derivative(v);
  }
  CommPoly<F> out;
  for (int a = 0; a < n; ++a) {
    if (df[static_cast<std::size_t>(a)].is_zero()) continue;
    CommPoly<F> inner;
    for (int b = 0; b < n; ++b) {
      if (a == b || dg[static_cast<std::size_t>(b)].is_zero()) continue;
      const CommPoly<F> gb = generator_bracket<F>(a, b, amb);
      if (gb.is_zero()) continue;
      inner += dg[static_cast<std::size_t>(b)] * gb;
    }
    if (!inner.is_zero()) out += df[static_cast<std::size_t>(a)] * inner;
  }
  return out;
}

template <class F>
CommPoly<F> bracket_mod(const CommPoly<F>& f, const CommPoly<F>& g, const GroebnerBasis<F>& J, const Ambient& amb) {
  return normal_form(bracket(f, g, amb), J);
}

namespace detail {
inline int inversion_count(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions;
}
}  // namespace detail

/// Commutative minor [I|J] by the alternating sum over permutations.
template <class F = Rational>
CommPoly<F> minor(const MinorIndex& idx, const Ambient& amb) {
  idx.validate(amb);
  std::vector<int> perm(idx.rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term<F>> terms;
  do {
    Monomial m;
    for (std::size_t k = 0; k < perm.size(); ++k)
      m = m * Monomial::var(amb.var(idx.rows[k], idx.cols[static_cast<std::size_t>(perm[k])]));
    const int len = detail::inversion_count(perm);
    terms.push_back({m, FieldTraits<F>::from(Rational(len % 2 == 0 ? 1 : -1))});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CommPoly<F>::from_terms(std::move(terms));
}

template <class F = Rational>
CommPoly<F> minor(const std::vector<int>& rows, const std::vector<int>& cols, const Ambient& amb) {
  return minor<F>(MinorIndex{rows, cols}, amb);
}

template <class F = Rational>
CommPoly<F> determinant(int m) {
  Ambient amb{m, m, false};
  std::vector<int> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), 1);
  return minor<F>(MinorIndex{all, all}, amb);
}

/// Generators of an ideal in the declared ambient: for SL, D - 1 is adjoined.
template <class F>
std::vector<CommPoly<F>> with_det_relation(std::vector<CommPoly<F>> gens, const Ambient& amb) {
  if (amb.special) {
    CommPoly<F> d = determinant<F>(amb.m);
    gens.push_back(d - CommPoly<F>(FieldTraits<F>::one()));
  }
  return gens;
}

/// Torus degree of a homogeneous polynomial.
template <class F>
Degree h_degree(const CommPoly<F>& f, const Ambient& amb) {
  if (f.is_zero()) throw NonHomogeneous("zero polynomial has no degree");
  std::optional<Degree> common;
  for (const auto& t : f.terms()) {
    Degree d(static_cast<std::size_t>(amb.m + amb.p), 0);
    for (int v = 0; v < amb.nvars(); ++v) {
      d[static_cast<std::size_t>(amb.row_of(v) - 1)] += t.mono[v];
      d[static_cast<std::size_t>(amb.m + amb.col_of(v) - 1)] += t.mono[v];
    }
    d = reduce_degree(d, amb);
    if (!common) common = d;
    else if (*common != d) throw NonHomogeneous("monomials have different torus degrees");
  }
  return *common;
}

/// Transpose Y_ij -> Y_ji.
template <class F>
CommPoly<F> tau(const CommPoly<F>& f, const Ambient& amb) {
  if (!amb.square()) throw IndexError("transpose needs a square ambient");
  std::vector<CommPoly<F>> image;
  for (int v = 0; v < amb.nvars(); ++v) image.push_back(CommPoly<F>::variable(amb.var(amb.col_of(v), amb.row_of(v))));
  return f.substitute(image);
}

/// Commutative value of an ordered minor product with nonnegative exponents.
template <class F = Rational>
CommPoly<F> expand_product(const MinorProduct& u, const Ambient& amb) {
  CommPoly<F> r(FieldTraits<F>::one());
  for (const auto& f : u.factors) {
    if (f.exponent < 0) throw NotMinorProduct("negative exponent in polynomial product " + u.to_string());
    r = r * minor<F>(f.index, amb).pow(f.exponent);
  }
  return r;
}

/// a / (x_1 ... x_k) with the denominator kept as a factor list.
template <class F = Rational>
struct Fraction {
  CommPoly<F> num;
  std::vector<CommPoly<F>> den;

  CommPoly<F> den_product() const {
    CommPoly<F> d(FieldTraits<F>::one());
    for (const auto& x : den) d = d * x;
    return d;
  }
};

template <class F = Rational>
Fraction<F> to_fraction(const MinorProduct& u, const Ambient& amb) {
  Fraction<F> fr{expand_product<F>(u.numerator(), amb), {}};
  for (const auto& f : u.denominator().factors)
    for (int k = 0; k < f.exponent; ++k) fr.den.push_back(minor<F>(f.index, amb));
  return fr;
}

/// {a/x, b/y} = ({a,b}xy - a{x,b}y - b{a,y}x + ab{x,y}) / (x^2 y^2).
template <class F>
Fraction<F> bracket_fraction(const Fraction<F>& u, const Fraction<F>& v, const Ambient& amb) {
  const CommPoly<F> x = u.den_product(), y = v.den_product();
  const CommPoly<F>& a = u.num;
  const CommPoly<F>& b = v.num;
  CommPoly<F> num = bracket(a, b, amb) * x * y - a * bracket(x, b, amb) * y - b * bracket(a, y, amb) * x +
                    a * b * bracket(x, y, amb);
  Fraction<F> out{num, {}};
  for (const auto& f : u.den) {
    out.den.push_back(f);
    out.den.push_back(f);
  }
  for (const auto& f : v.den) {
    out.den.push_back(f);
    out.den.push_back(f);
  }
  return out;
}

/// {f, R} contained in fR modulo J: every generator bracket lies in J + <f>.
template <class F>
bool is_poisson_normal_mod(const CommPoly<F>& f, const std::vector<CommPoly<F>>& J, const Ambient& amb) {
  std::vector<CommPoly<F>> gens = with_det_relation(J, amb);
  gens.push_back(f);
  const GroebnerBasis<F> G = buchberger(gens);
  for (int v = 0; v < amb.nvars(); ++v)
    if (!member(bracket(f, CommPoly<F>::variable(v), amb), G)) return false;
  return true;
}

/// u = U V^{-1} is Poisson-central mod J iff {U,y}V - U{V,y} lies in J for
/// every generator y. `JG` is a Groebner basis of J (with D - 1 for SL).
inline bool is_poisson_central_fraction(const MinorProduct& u, const GroebnerBasis<Rational>& JG, const Ambient& amb) {
  for (const auto& f : u.denominator().factors)
    if (member(minor(f.index, amb), JG))
      throw DenominatorInIdeal("denominator factor " + f.index.to_string() + " lies in the ideal");
  const QPoly U = expand_product(u.numerator(), amb);
  const QPoly V = expand_product(u.denominator(), amb);
  for (int v = 0; v < amb.nvars(); ++v) {
    const QPoly y = QPoly::variable(v);
    if (!member(bracket(U, y, amb) * V - U * bracket(V, y, amb), JG)) return false;
  }
  return true;
}

inline GroebnerBasis<Rational> ideal_basis(const std::vector<MinorIndex>& gens, const Ambient& amb) {
  std::vector<QPoly> polys;
  for (const auto& g : gens) polys.push_back(minor(g, amb));
  return buchberger(with_det_relation(polys, amb));
}

}  // namespace strata
