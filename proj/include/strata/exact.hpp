#pragma once

// Exact coefficient arithmetic: rationals, Laurent polynomials in q, and
// rational functions in the primitive-ideal parameters l1, l2, ...

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "strata/error.hpp"

namespace strata {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// QLaurent
// ---------------------------------------------------------------------------

/// Element of Q[q, q^-1], stored as exponent -> nonzero coefficient.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(const Rational& c, int exponent = 0) {  // NOLINT(implicit)
    if (c != 0) terms_.emplace(exponent, c);
  }
  QLaurent(long c) : QLaurent(Rational(c)) {}  // NOLINT(implicit)

  static QLaurent q_pow(int e) { return QLaurent(Rational(1), e); }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

  /// Units of the Laurent ring are exactly the single-term elements c*q^k.
  bool is_unit() const { return terms_.size() == 1; }

  std::optional<std::pair<int, Rational>> as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
  }

  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  QLaurent& operator+=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  QLaurent& operator-=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  QLaurent operator-() const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

  /// Substitution q := 1.
  Rational eval_one() const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  /// Multiply by q^k.
  QLaurent shifted(int k) const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  /// Inverse of a unit c*q^k.
  QLaurent unit_inverse() const {
    auto m = as_monomial();
    if (!m) throw NotDivisible("QLaurent " + to_string() + " is not a unit");
    return QLaurent(Rational(1) / m->second, -m->first);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Rational c = it->second;
      const int e = it->first;
      if (first) {
        if (c < 0) {
          os << "-";
          c = -c;
        }
      } else {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      first = false;
      if (e == 0) {
        os << c.get_str();
        continue;
      }
      if (c != 1) os << c.get_str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  void add_term(int e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<int, Rational> terms_;
};

inline QLaurent qlaurent_mul(const QLaurent& a, const QLaurent& b) { return a * b; }
inline Rational qlaurent_eval_one(const QLaurent& a) { return a.eval_one(); }

/// Exact quotient a / b in Q[q, q^-1]; throws NotDivisible when b does not divide a.
inline QLaurent qlaurent_div_exact(const QLaurent& a, const QLaurent& b) {
  if (b.is_zero()) throw NotDivisible("division by zero Laurent polynomial");
  if (a.is_zero()) return {};
  // Strip q-power units so both become polynomials with nonzero constant term.
  const int sa = a.min_exponent(), sb = b.min_exponent();
  std::vector<Rational> num(static_cast<std::size_t>(a.max_exponent() - sa + 1));
  std::vector<Rational> den(static_cast<std::size_t>(b.max_exponent() - sb + 1));
  for (const auto& [e, c] : a.terms()) num[static_cast<std::size_t>(e - sa)] = c;
  for (const auto& [e, c] : b.terms()) den[static_cast<std::size_t>(e - sb)] = c;
  if (den.size() > num.size()) throw NotDivisible(a.to_string() + " is not divisible by " + b.to_string());
  std::vector<Rational> quot(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational c = num[k + den.size() - 1] / lead;
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw NotDivisible(a.to_string() + " is not divisible by " + b.to_string());
  QLaurent out;
  for (std::size_t k = 0; k < quot.size(); ++k)
    out += QLaurent(quot[k], static_cast<int>(k) + sa - sb);
  return out;
}

// ---------------------------------------------------------------------------
// ParamPoly / ParamRational
// ---------------------------------------------------------------------------

/// Commutative polynomial in parameters l1, l2, ... over Q. Exponent vectors
/// are stored with trailing zeros trimmed so that comparison is canonical.
class ParamPoly {
 public:
  using Exponents = std::vector<int>;

  ParamPoly() = default;
  ParamPoly(const Rational& c) {  // NOLINT(implicit)
    if (c != 0) terms_.emplace(Exponents{}, c);
  }
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT(implicit)

  /// The parameter l_index (1-based).
  static ParamPoly param(int index) {
    if (index < 1) throw IndexError("parameter index must be >= 1");
    Exponents e(static_cast<std::size_t>(index), 0);
    e.back() = 1;
    ParamPoly p;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  Rational constant_value() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Largest term in lex order on trimmed exponent vectors.
  const std::pair<const Exponents, Rational>& leading() const { return *terms_.rbegin(); }

  /// 1-based indices of parameters that occur.
  std::vector<int> variables() const {
    std::vector<int> vars;
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && std::find(vars.begin(), vars.end(), static_cast<int>(i) + 1) == vars.end())
          vars.push_back(static_cast<int>(i) + 1);
    std::sort(vars.begin(), vars.end());
    return vars;
  }

  ParamPoly& operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  ParamPoly& operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  ParamPoly operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  ParamPoly scaled(const Rational& c) const {
    ParamPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
  }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  /// Degree in parameter `var` (1-based); only meaningful for univariate use.
  int degree_in(int var) const {
    int d = 0;
    const auto idx = static_cast<std::size_t>(var - 1);
    for (const auto& [e, c] : terms_) d = std::max(d, idx < e.size() ? e[idx] : 0);
    return d;
  }
  Rational coefficient_univariate(int var, int power) const {
    Exponents e;
    if (power > 0) {
      e.assign(static_cast<std::size_t>(var), 0);
      e.back() = power;
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Rational c = it->second;
      if (first) {
        if (c < 0) {
          os << "-";
          c = -c;
        }
      } else {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < it->first.size(); ++i) {
        if (it->first[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "l" + std::to_string(i + 1);
        if (it->first[i] != 1) mono += "^" + std::to_string(it->first[i]);
      }
      if (mono.empty()) {
        os << c.get_str();
      } else {
        if (c != 1) os << c.get_str() << "*";
        os << mono;
      }
    }
    return os.str();
  }

 private:
  static Exponents trimmed(Exponents e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
  }
  void add_term(const Exponents& raw, const Rational& c) {
    if (c == 0) return;
    Exponents e = trimmed(raw);
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Exponents, Rational> terms_;
};

namespace detail {

// Univariate helpers in a single parameter `var`, coefficients indexed by power.
inline std::vector<Rational> dense(const ParamPoly& p, int var) {
  std::vector<Rational> v(static_cast<std::size_t>(p.degree_in(var)) + 1);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = p.coefficient_univariate(var, static_cast<int>(k));
  return v;
}
inline void trim(std::vector<Rational>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}
inline ParamPoly sparse(const std::vector<Rational>& v, int var) {
  ParamPoly r;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    r += k == 0 ? ParamPoly(v[k]) : [&] {
      ParamPoly m(v[k]);
      for (std::size_t j = 0; j < k; ++j) m = m * ParamPoly::param(var);
      return m;
    }();
  }
  return r;
}
// Returns (quotient, remainder) of a / b.
inline std::pair<std::vector<Rational>, std::vector<Rational>> divmod(std::vector<Rational> a,
                                                                        std::vector<Rational> b) {
  trim(a);
  trim(b);
  if (b.empty()) throw NotDivisible("univariate division by zero");
  if (a.size() < b.size()) return {{}, a};
  std::vector<Rational> q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  return {q, a};
}
inline std::vector<Rational> gcd(std::vector<Rational> a, std::vector<Rational> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace detail

/// Rational function num/den in the parameters. Normalized so that the
/// denominator's leading coefficient is 1; when everything is univariate in a
/// single parameter the fraction is fully reduced by polynomial gcd.
class ParamRational {
 public:
  ParamRational() : num_(), den_(1) {}
  ParamRational(const Rational& c) : num_(c), den_(1) {}  // NOLINT(implicit)
  ParamRational(long c) : num_(Rational(c)), den_(1) {}   // NOLINT(implicit)
  ParamRational(ParamPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(implicit)
  ParamRational(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static ParamRational param(int index) { return ParamRational(ParamPoly::param(index)); }

  const ParamPoly& numerator() const { return num_; }
  const ParamPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  friend ParamRational operator+(const ParamRational& a, const ParamRational& b) {
    if (a.den_ == b.den_) return ParamRational(a.num_ + b.num_, a.den_);
    return ParamRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ParamRational operator-(const ParamRational& a, const ParamRational& b) {
    if (a.den_ == b.den_) return ParamRational(a.num_ - b.num_, a.den_);
    return ParamRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  ParamRational operator-() const {
    ParamRational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend ParamRational operator*(const ParamRational& a, const ParamRational& b) {
    return ParamRational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend ParamRational operator/(const ParamRational& a, const ParamRational& b) {
    if (b.is_zero()) throw NotDivisible("division by zero rational function");
    return ParamRational(a.num_ * b.den_, a.den_ * b.num_);
  }
  ParamRational& operator+=(const ParamRational& o) { return *this = *this + o; }
  ParamRational& operator-=(const ParamRational& o) { return *this = *this - o; }
  ParamRational& operator*=(const ParamRational& o) { return *this = *this * o; }
  ParamRational& operator/=(const ParamRational& o) { return *this = *this / o; }

  friend bool operator==(const ParamRational& a, const ParamRational& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const ParamRational& a, const ParamRational& b) { return !(a == b); }

  std::string to_string() const {
    if (den_ == ParamPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw NotDivisible("zero denominator in rational function");
    if (num_.is_zero()) {
      den_ = ParamPoly(1);
      return;
    }
    auto vars = num_.variables();
    for (int v : den_.variables())
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    if (vars.size() == 1 && !den_.is_constant()) {
      const int v = vars.front();
      auto g = detail::gcd(detail::dense(num_, v), detail::dense(den_, v));
      if (g.size() > 1) {
        num_ = detail::sparse(detail::divmod(detail::dense(num_, v), g).first, v);
        den_ = detail::sparse(detail::divmod(detail::dense(den_, v), g).first, v);
      }
    }
    const Rational lead = den_.leading().second;
    if (lead != 1) {
      const Rational inv = Rational(1) / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  ParamPoly num_;
  ParamPoly den_;
};

// ---------------------------------------------------------------------------
// Field traits used by the generic polynomial and Groebner code
// ---------------------------------------------------------------------------

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool is_one(const Rational& x) { return x == 1; }
  static Rational from(const Rational& x) { return x; }
  /// True when the printed form should be emitted with a leading minus.
  static bool prints_negative(const Rational& x) { return x < 0; }
  /// Whether the printed form needs parentheses as a product factor.
  static bool needs_parens(const Rational&) { return false; }
  static std::string str(const Rational& x) { return x.get_str(); }
};

template <>
struct FieldTraits<ParamRational> {
  static ParamRational zero() { return ParamRational(0); }
  static ParamRational one() { return ParamRational(1); }
  static bool is_zero(const ParamRational& x) { return x.is_zero(); }
  static bool is_one(const ParamRational& x) { return x == one(); }
  static ParamRational from(const Rational& x) { return ParamRational(x); }
  static bool prints_negative(const ParamRational& x) {
    return x.denominator() == ParamPoly(1) && !x.is_zero() && x.numerator().leading().second < 0;
  }
  static bool needs_parens(const ParamRational& x) {
    return !(x.numerator().terms().size() == 1 && x.denominator() == ParamPoly(1));
  }
  static std::string str(const ParamRational& x) { return x.to_string(); }
};

}  // namespace strata
