#pragma once

// Sparse commutative polynomials over an abstract coefficient field, in the
// coordinate functions Y_ij of an m x p matrix.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "strata/error.hpp"
#include "strata/exact.hpp"

namespace strata {

inline constexpr int kMaxVars = 16;

/// Matrix shape of the ambient coordinate ring. `special` marks the SL
/// quotient, represented by adjoining D - 1 to every ideal.
struct Ambient {
  int m = 3;
  int p = 3;
  bool special = true;

  int nvars() const { return m * p; }
  bool square() const { return m == p; }
  /// 0-based variable index of Y_ij (1-based i, j).
  int var(int i, int j) const {
    if (i < 1 || i > m || j < 1 || j > p)
      throw IndexError("coordinate (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                       std::to_string(m) + "x" + std::to_string(p) + " matrix");
    return (i - 1) * p + (j - 1);
  }
  int row_of(int v) const { return v / p + 1; }
  int col_of(int v) const { return v % p + 1; }
  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.m == b.m && a.p == b.p && a.special == b.special;
  }
};

inline Ambient sl3() { return Ambient{3, 3, true}; }
inline Ambient m3() { return Ambient{3, 3, false}; }
inline Ambient m2() { return Ambient{2, 2, false}; }

inline void check_ambient(const Ambient& a) {
  if (a.m < 1 || a.p < 1 || a.nvars() > kMaxVars)
    throw IndexError("ambient " + std::to_string(a.m) + "x" + std::to_string(a.p) + " not supported");
}

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  static Monomial var(int v, int power = 1) {
    Monomial m;
    m.e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
    return m;
  }
  int operator[](int v) const { return e[static_cast<std::size_t>(v)]; }
  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < r.e.size(); ++i) {
      const int s = a.e[i] + b.e[i];
      if (s > 255) throw Error("monomial exponent overflow");
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    return r;
  }
  /// Exact quotient; caller guarantees b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : m.e) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

/// Graded reverse lexicographic order with variable 0 (Y11) largest.
/// Returns <0, 0, >0.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

template <class F>
struct Term {
  Monomial mono;
  F coeff;
};

/// Polynomial as a list of terms sorted strictly descending in grevlex order,
/// with no zero coefficients.
template <class F>
class CommPoly {
 public:
  using Traits = FieldTraits<F>;
  using TermT = Term<F>;

  CommPoly() = default;
  CommPoly(const F& c) {  // NOLINT(implicit)
    if (!Traits::is_zero(c)) terms_.push_back({Monomial{}, c});
  }
  static CommPoly constant(const F& c) { return CommPoly(c); }
  static CommPoly monomial(const Monomial& m, const F& c) {
    CommPoly p;
    if (!Traits::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  static CommPoly variable(int v) { return monomial(Monomial::var(v), Traits::one()); }
  static CommPoly from_terms(std::vector<TermT> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const TermT& a, const TermT& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
    CommPoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
        if (Traits::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!Traits::is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const std::vector<TermT>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermT& leading() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().mono; }
  const F& lc() const { return terms_.front().coeff; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  CommPoly operator-() const {
    CommPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend CommPoly operator+(const CommPoly& a, const CommPoly& b) { return combine(a, b, false); }
  friend CommPoly operator-(const CommPoly& a, const CommPoly& b) { return combine(a, b, true); }
  CommPoly& operator+=(const CommPoly& o) { return *this = *this + o; }
  CommPoly& operator-=(const CommPoly& o) { return *this = *this - o; }

  CommPoly scaled(const F& c) const {
    CommPoly r;
    if (Traits::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
  }
  /// Multiply by c * m; order is preserved since grevlex is multiplicative.
  CommPoly times_term(const Monomial& m, const F& c) const {
    CommPoly r;
    if (Traits::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    const CommPoly& big = a.size() >= b.size() ? a : b;
    const CommPoly& small = a.size() >= b.size() ? b : a;
    CommPoly r;
    for (const auto& t : small.terms_) r = r + big.times_term(t.mono, t.coeff);
    return r;
  }
  CommPoly& operator*=(const CommPoly& o) { return *this = *this * o; }
  CommPoly pow(int k) const {
    if (k < 0) throw Error("negative polynomial power");
    CommPoly r(Traits::one());
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }
  friend bool operator==(const CommPoly& a, const CommPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
  }
  friend bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

  /// Partial derivative with respect to variable v.
  CommPoly derivative(int v) const {
    std::vector<TermT> out;
    for (const auto& t : terms_) {
      const int k = t.mono[v];
      if (k == 0) continue;
      Monomial m = t.mono;
      m.e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(k - 1);
      out.push_back({m, t.coeff * Traits::from(Rational(k))});
    }
    CommPoly r;
    r.terms_ = std::move(out);
    return r;
  }

  /// Substitute variables through `image` (one polynomial per variable).
  CommPoly substitute(const std::vector<CommPoly>& image) const {
    CommPoly r;
    for (const auto& t : terms_) {
      CommPoly term(t.coeff);
      for (std::size_t v = 0; v < image.size(); ++v)
        for (int k = 0; k < t.mono.e[v]; ++k) term = term * image[v];
      r = r + term;
    }
    return r;
  }

  /// Make the leading coefficient one.
  CommPoly monic() const {
    if (is_zero()) return *this;
    return scaled(Traits::one() / lc());
  }

  template <class G, class Fn>
  CommPoly<G> map_coeffs(Fn fn) const {
    std::vector<Term<G>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono, fn(t.coeff)});
    return CommPoly<G>::from_terms(std::move(out));
  }

 private:
  static CommPoly combine(const CommPoly& a, const CommPoly& b, bool subtract) {
    CommPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) c = -1;
      else if (j == b.terms_.size()) c = 1;
      else c = grevlex_cmp(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        F s = subtract ? F(a.terms_[i].coeff - b.terms_[j].coeff) : F(a.terms_[i].coeff + b.terms_[j].coeff);
        if (!Traits::is_zero(s)) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<TermT> terms_;
};

using QPoly = CommPoly<Rational>;
using LambdaPoly = CommPoly<ParamRational>;

inline LambdaPoly to_lambda(const QPoly& p) {
  return p.map_coeffs<ParamRational>([](const Rational& c) { return ParamRational(c); });
}

/// Name of a variable, e.g. "Y23".
inline std::string var_name(const Ambient& a, int v, char letter = 'Y') {
  return std::string(1, letter) + std::to_string(a.row_of(v)) + std::to_string(a.col_of(v));
}

inline std::string monomial_string(const Ambient& a, const Monomial& m, char letter = 'Y') {
  std::string s;
  for (int v = 0; v < a.nvars(); ++v) {
    const int k = m[v];
    if (k == 0) continue;
    if (!s.empty()) s += "*";
    s += var_name(a, v, letter);
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s;
}

/// Render a polynomial with terms in descending order, e.g. "2*Y12*Y21".
template <class F>
std::string to_string(const CommPoly<F>& p, const Ambient& a, char letter = 'Y') {
  using Tr = FieldTraits<F>;
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    F c = t.coeff;
    const bool neg = Tr::prints_negative(c);
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_string(a, t.mono, letter);
    if (mono.empty()) {
      out += Tr::needs_parens(c) ? "(" + Tr::str(c) + ")" : Tr::str(c);
    } else {
      if (!Tr::is_one(c)) out += (Tr::needs_parens(c) ? "(" + Tr::str(c) + ")" : Tr::str(c)) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace strata
