#pragma once

// Expression front end: a recursive-descent parser for polynomial, minor and
// minor-product expressions, a printer that round-trips, and evaluation to
// the commutative and quantum engines.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' ['-'] int)?
//   atom   := 'Y' d d | 'X' d d | '[' d+ '|' d+ ']' | 'q' | 'l' d
//           | int ('/' int)? | '(' expr ')' | '{' expr ',' expr '}'

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "strata/comm_poly.hpp"
#include "strata/error.hpp"
#include "strata/exact.hpp"
#include "strata/labels.hpp"
#include "strata/poisson.hpp"
#include "strata/quantum.hpp"

namespace strata {

struct ExprAst {
  enum class Kind { Coord, Minor, Scalar, Param, Q, Sum, Product, Power, Neg, Bracket };

  Kind kind = Kind::Scalar;
  char letter = 'Y';          // Coord / Minor: 'X' or 'Y'
  MinorIndex index;           // Coord / Minor
  Rational scalar = 0;        // Scalar, nonnegative
  int param = 0;              // Param: l1, l2, ...
  int exponent = 1;           // Power
  std::vector<ExprAst> kids;  // Sum, Product, Power (1), Neg (1), Bracket (2)
  std::vector<bool> minus;    // Sum: sign of each summand, first is always false

  static ExprAst coord(char letter, int i, int j) {
    ExprAst a;
    a.kind = Kind::Coord;
    a.letter = letter;
    a.index = MinorIndex::coordinate(i, j);
    return a;
  }
  static ExprAst minor(char letter, MinorIndex idx) {
    ExprAst a;
    a.kind = Kind::Minor;
    a.letter = letter;
    a.index = std::move(idx);
    return a;
  }
  static ExprAst number(const Rational& r) {
    ExprAst a;
    a.kind = Kind::Scalar;
    a.scalar = r;
    return a;
  }
  static ExprAst lambda(int i) {
    ExprAst a;
    a.kind = Kind::Param;
    a.param = i;
    return a;
  }
  static ExprAst q() {
    ExprAst a;
    a.kind = Kind::Q;
    return a;
  }
  static ExprAst power(ExprAst base, int e) {
    ExprAst a;
    a.kind = Kind::Power;
    a.exponent = e;
    a.kids.push_back(std::move(base));
    return a;
  }
  static ExprAst negate(ExprAst x) {
    ExprAst a;
    a.kind = Kind::Neg;
    a.kids.push_back(std::move(x));
    return a;
  }
  static ExprAst bracket(ExprAst x, ExprAst y) {
    ExprAst a;
    a.kind = Kind::Bracket;
    a.kids.push_back(std::move(x));
    a.kids.push_back(std::move(y));
    return a;
  }

  bool is_atom() const {
    return kind == Kind::Coord || kind == Kind::Minor || kind == Kind::Scalar || kind == Kind::Param ||
           kind == Kind::Q || kind == Kind::Bracket;
  }
  /// Atoms that may carry a negative exponent.
  bool invertible() const {
    if (kind == Kind::Scalar) return scalar != 0;
    return kind == Kind::Coord || kind == Kind::Minor || kind == Kind::Param || kind == Kind::Q;
  }

  friend bool operator==(const ExprAst& a, const ExprAst& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Coord:
        return a.letter == b.letter && a.index == b.index;
      case Kind::Minor:
        return a.index == b.index;
      case Kind::Scalar:
        return a.scalar == b.scalar;
      case Kind::Param:
        return a.param == b.param;
      case Kind::Q:
        return true;
      case Kind::Power:
        return a.exponent == b.exponent && a.kids == b.kids;
      case Kind::Sum:
        return a.minus == b.minus && a.kids == b.kids;
      default:
        return a.kids == b.kids;
    }
  }
  friend bool operator!=(const ExprAst& a, const ExprAst& b) { return !(a == b); }
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, const Ambient& amb) : s_(text), amb_(amb) {}

  ExprAst parse() {
    ExprAst e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  int digit() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected digit");
    return s_[pos_++] - '0';
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  ExprAst expr() {
    ExprAst first = term();
    std::vector<ExprAst> kids{std::move(first)};
    std::vector<bool> minus{false};
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      kids.push_back(term());
      minus.push_back(c == '-');
    }
    if (kids.size() == 1) return std::move(kids[0]);
    ExprAst a;
    a.kind = ExprAst::Kind::Sum;
    a.kids = std::move(kids);
    a.minus = std::move(minus);
    return a;
  }

  ExprAst term() {
    std::vector<ExprAst> kids{factor()};
    while (eat('*')) kids.push_back(factor());
    if (kids.size() == 1) return std::move(kids[0]);
    ExprAst a;
    a.kind = ExprAst::Kind::Product;
    a.kids = std::move(kids);
    return a;
  }

  ExprAst factor() {
    if (eat('-')) return ExprAst::negate(factor());
    const std::size_t at = (skip(), pos_);
    ExprAst base = atom();
    if (!eat('^')) return base;
    skip();
    const bool neg = eat('-');
    skip();
    const std::string d = digits();
    if (d.size() > 6) fail("exponent too large");
    const int e = neg ? -std::stoi(d) : std::stoi(d);
    if (e < 0 && !base.invertible()) throw SyntaxError("negative exponent on a non-invertible expression", at);
    return ExprAst::power(std::move(base), e);
  }

  ExprAst atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == 'Y' || c == 'X') {
      const std::size_t at = pos_++;
      const int i = digit();
      const int j = digit();
      try {
        MinorIndex::coordinate(i, j).validate(amb_);
      } catch (const IndexError& e) {
        throw IndexError(std::string(e.what()) + " at position " + std::to_string(at));
      }
      return ExprAst::coord(c, i, j);
    }
    if (c == '[') {
      const std::size_t at = pos_++;
      MinorIndex idx;
      for (char d : digits()) idx.rows.push_back(d - '0');
      expect('|');
      skip();
      for (char d : digits()) idx.cols.push_back(d - '0');
      expect(']');
      try {
        idx.validate(amb_);
      } catch (const IndexError& e) {
        throw IndexError(std::string(e.what()) + " at position " + std::to_string(at));
      }
      return ExprAst::minor(letter_hint_, std::move(idx));
    }
    if (c == 'q') {
      ++pos_;
      return ExprAst::q();
    }
    if (c == 'l') {
      ++pos_;
      const int i = digit();
      if (i < 1) fail("parameters are numbered from 1");
      return ExprAst::lambda(i);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        return ExprAst::number(Rational(Integer(num), Integer(den)));
      }
      return ExprAst::number(Rational(Integer(num)));
    }
    if (c == '(') {
      ++pos_;
      ExprAst e = expr();
      expect(')');
      return e;
    }
    if (c == '{') {
      ++pos_;
      ExprAst a = expr();
      expect(',');
      ExprAst b = expr();
      expect('}');
      return ExprAst::bracket(std::move(a), std::move(b));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  Ambient amb_;
  std::size_t pos_ = 0;
  char letter_hint_ = 'Y';

 public:
  void set_minor_letter(char c) { letter_hint_ = c; }
};

inline std::string print_rational(const Rational& r) { return r.get_str(); }

}  // namespace detail

/// Parse `text`; minors are tagged with `minor_letter` (they carry no letter).
inline ExprAst parse_expr(std::string_view text, const Ambient& amb, char minor_letter = 'Y') {
  detail::Parser p(text, amb);
  p.set_minor_letter(minor_letter);
  return p.parse();
}

inline std::string print_expr(const ExprAst& a) {
  using K = ExprAst::Kind;
  auto wrap = [](const ExprAst& x, bool need) { return need ? "(" + print_expr(x) + ")" : print_expr(x); };
  switch (a.kind) {
    case K::Coord:
      return a.index.to_string(a.letter);
    case K::Minor:
      return a.index.to_string(a.letter);
    case K::Scalar:
      return detail::print_rational(a.scalar);
    case K::Param:
      return "l" + std::to_string(a.param);
    case K::Q:
      return "q";
    case K::Bracket:
      return "{" + print_expr(a.kids[0]) + ", " + print_expr(a.kids[1]) + "}";
    case K::Power:
      return wrap(a.kids[0], !a.kids[0].is_atom()) + "^" + std::to_string(a.exponent);
    case K::Neg:
      return "-" + wrap(a.kids[0], a.kids[0].kind == K::Sum || a.kids[0].kind == K::Product);
    case K::Product: {
      std::string s;
      for (std::size_t k = 0; k < a.kids.size(); ++k) {
        if (k) s += "*";
        s += wrap(a.kids[k], a.kids[k].kind == K::Sum || a.kids[k].kind == K::Product);
      }
      return s;
    }
    case K::Sum: {
      std::string s;
      for (std::size_t k = 0; k < a.kids.size(); ++k) {
        if (k) s += a.minus[k] ? " - " : " + ";
        s += wrap(a.kids[k], a.kids[k].kind == K::Sum);
      }
      return s;
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// Minor products and theta
// ---------------------------------------------------------------------------

namespace detail {

inline void collect_factors(const ExprAst& a, int exponent, MinorProduct& out) {
  using K = ExprAst::Kind;
  switch (a.kind) {
    case K::Coord:
    case K::Minor:
      out = out * single(a.index, exponent);
      return;
    case K::Power:
      if (a.kids[0].kind == K::Coord || a.kids[0].kind == K::Minor) {
        out = out * single(a.kids[0].index, exponent * a.exponent);
        return;
      }
      break;
    case K::Product:
      if (exponent == 1) {
        for (const auto& k : a.kids) collect_factors(k, 1, out);
        return;
      }
      break;
    case K::Scalar:
      if (a.scalar == 1) return;
      break;
    default:
      break;
  }
  throw NotMinorProduct("not a product of minors: " + print_expr(a));
}

}  // namespace detail

/// Ordered product of minors and coordinates with integer exponents.
inline MinorProduct to_minor_product(const ExprAst& a) {
  MinorProduct out;
  detail::collect_factors(a, 1, out);
  return out;
}

inline MinorProduct parse_minor_product(std::string_view text, const Ambient& amb) {
  return to_minor_product(parse_expr(text, amb));
}

/// Preservation of notation: a product of quantum minors and inverses maps to
/// the commutative product with the same index data, in the same order.
inline MinorProduct theta(const ExprAst& a) { return to_minor_product(a); }
inline MinorProduct theta(const MinorProduct& u) { return u; }

inline ExprAst minor_atom(const MinorIndex& idx, char letter) {
  return idx.is_coordinate() ? ExprAst::coord(letter, idx.rows[0], idx.cols[0]) : ExprAst::minor(letter, idx);
}

inline ExprAst to_ast(const MinorProduct& u, char letter) {
  if (u.factors.empty()) return ExprAst::number(1);
  std::vector<ExprAst> kids;
  for (const auto& f : u.factors) {
    ExprAst atom = minor_atom(f.index, letter);
    kids.push_back(f.exponent == 1 ? atom : ExprAst::power(atom, f.exponent));
  }
  if (kids.size() == 1) return kids[0];
  ExprAst p;
  p.kind = ExprAst::Kind::Product;
  p.kids = std::move(kids);
  return p;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Commutative value; the bracket {a,b} is the Poisson bracket. q is rejected.
template <class F = ParamRational>
CommPoly<F> eval_poisson(const ExprAst& a, const Ambient& amb) {
  using K = ExprAst::Kind;
  using Tr = FieldTraits<F>;
  switch (a.kind) {
    case K::Coord:
      return CommPoly<F>::variable(amb.var(a.index.rows[0], a.index.cols[0]));
    case K::Minor:
      return minor<F>(a.index, amb);
    case K::Scalar:
      return CommPoly<F>(Tr::from(a.scalar));
    case K::Param:
      if constexpr (std::is_same_v<F, ParamRational>) {
        return CommPoly<F>(ParamRational::param(a.param));
      } else {
        throw Error("parameter l" + std::to_string(a.param) + " needs symbolic coefficients");
      }
    case K::Q:
      throw Error("q is not defined on the Poisson side");
    case K::Bracket:
      return bracket(eval_poisson<F>(a.kids[0], amb), eval_poisson<F>(a.kids[1], amb), amb);
    case K::Neg:
      return -eval_poisson<F>(a.kids[0], amb);
    case K::Power: {
      const ExprAst& b = a.kids[0];
      if (a.exponent >= 0) return eval_poisson<F>(b, amb).pow(a.exponent);
      if (b.kind == K::Scalar) return CommPoly<F>(Tr::from(Rational(1) / b.scalar)).pow(-a.exponent);
      if constexpr (std::is_same_v<F, ParamRational>) {
        if (b.kind == K::Param) return CommPoly<F>(Tr::one() / ParamRational::param(b.param)).pow(-a.exponent);
      }
      throw NotMinorProduct("inverse of " + print_expr(b) + " is not a polynomial");
    }
    case K::Product: {
      CommPoly<F> r(Tr::one());
      for (const auto& k : a.kids) r = r * eval_poisson<F>(k, amb);
      return r;
    }
    case K::Sum: {
      CommPoly<F> r;
      for (std::size_t k = 0; k < a.kids.size(); ++k) {
        if (a.minus[k]) r -= eval_poisson<F>(a.kids[k], amb);
        else r += eval_poisson<F>(a.kids[k], amb);
      }
      return r;
    }
  }
  return {};
}

/// Quantum value in PBW normal form. Brackets and parameters are rejected.
inline NCPoly eval_quantum(const ExprAst& a, const Ambient& amb) {
  using K = ExprAst::Kind;
  switch (a.kind) {
    case K::Coord:
      return NCPoly::generator(amb.var(a.index.rows[0], a.index.cols[0]));
    case K::Minor:
      return q_minor(a.index, amb);
    case K::Scalar:
      return NCPoly(QLaurent(a.scalar));
    case K::Q:
      return NCPoly(QLaurent::q_pow(1));
    case K::Param:
      throw Error("parameters are not defined on the quantum side");
    case K::Bracket:
      throw Error("the bracket {a,b} is only defined on the Poisson side");
    case K::Neg:
      return -eval_quantum(a.kids[0], amb);
    case K::Power: {
      const ExprAst& b = a.kids[0];
      if (a.exponent < 0) {
        if (b.kind == K::Q) return NCPoly(QLaurent::q_pow(a.exponent));
        if (b.kind == K::Scalar) {
          NCPoly r(QLaurent(1));
          const NCPoly inv(QLaurent(Rational(1) / b.scalar));
          for (int k = 0; k < -a.exponent; ++k) r = nc_mul(r, inv, amb);
          return r;
        }
        throw NotMinorProduct("inverse of " + print_expr(b) + " is not a polynomial");
      }
      const NCPoly base = eval_quantum(b, amb);
      NCPoly r(QLaurent(1));
      for (int k = 0; k < a.exponent; ++k) r = nc_mul(r, base, amb);
      return r;
    }
    case K::Product: {
      NCPoly r(QLaurent(1));
      for (const auto& k : a.kids) r = nc_mul(r, eval_quantum(k, amb), amb);
      return r;
    }
    case K::Sum: {
      NCPoly r;
      for (std::size_t k = 0; k < a.kids.size(); ++k) {
        if (a.minus[k]) r -= eval_quantum(a.kids[k], amb);
        else r += eval_quantum(a.kids[k], amb);
      }
      return r;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Rewriting
// ---------------------------------------------------------------------------

/// Substitute q = 1 and retag coordinates with `letter`.
inline ExprAst classical_limit(ExprAst a, char letter = 'Y') {
  using K = ExprAst::Kind;
  if (a.kind == K::Q) return ExprAst::number(1);
  if (a.kind == K::Coord || a.kind == K::Minor) a.letter = letter;
  for (auto& k : a.kids) k = classical_limit(std::move(k), letter);
  return a;
}

/// Apply tau: every coordinate and minor index is transposed.
inline ExprAst transpose_expr(ExprAst a) {
  if (a.kind == ExprAst::Kind::Coord || a.kind == ExprAst::Kind::Minor) a.index = a.index.transposed();
  for (auto& k : a.kids) k = transpose_expr(std::move(k));
  return a;
}

/// Coordinates and minors occurring in `a`.
inline void collect_atoms(const ExprAst& a, std::vector<MinorIndex>& out) {
  if (a.kind == ExprAst::Kind::Coord || a.kind == ExprAst::Kind::Minor) {
    if (std::find(out.begin(), out.end(), a.index) == out.end()) out.push_back(a.index);
    return;
  }
  for (const auto& k : a.kids) collect_atoms(k, out);
}

}  // namespace strata
