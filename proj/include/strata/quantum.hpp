#pragma once

// Quantum matrices O_q(M_{m,p}): PBW normal forms by rewriting, quantum
// minors, q-commutation, one-sided ideal reduction and the q -> 1 check.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "strata/comm_poly.hpp"
#include "strata/exact.hpp"
#include "strata/labels.hpp"
#include "strata/poisson.hpp"

namespace strata {

/// PBW word order: by degree, then lexicographically from the largest
/// generator (X_mp) down. Returns <0, 0, >0.
inline int nc_word_cmp(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.e.size(); i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

struct NcWordGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return nc_word_cmp(a, b) > 0; }
};

/// Sum of PBW words (sorted generator exponent vectors) with coefficients in
/// Q[q, q^-1]. Iteration runs from the leading word down.
class NCPoly {
 public:
  using Map = std::map<Monomial, QLaurent, NcWordGreater>;

  NCPoly() = default;
  NCPoly(const QLaurent& c) {  // NOLINT(implicit)
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }
  static NCPoly word(const Monomial& w, const QLaurent& c = QLaurent(1)) {
    NCPoly p;
    if (!c.is_zero()) p.terms_.emplace(w, c);
    return p;
  }
  static NCPoly generator(int v) { return word(Monomial::var(v)); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Monomial& leading_word() const { return terms_.begin()->first; }
  const QLaurent& leading_coeff() const { return terms_.begin()->second; }

  void add_term(const Monomial& w, const QLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  NCPoly& add_scaled(const NCPoly& o, const QLaurent& c) {
    if (c.is_zero()) return *this;
    for (const auto& [w, d] : o.terms_) add_term(w, d * c);
    return *this;
  }
  NCPoly& operator+=(const NCPoly& o) { return add_scaled(o, QLaurent(1)); }
  NCPoly& operator-=(const NCPoly& o) { return add_scaled(o, QLaurent(-1)); }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  NCPoly operator-() const { return scaled(QLaurent(-1)); }
  NCPoly scaled(const QLaurent& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, d] : terms_) r.terms_.emplace(w, d * c);
    return r;
  }
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  /// Substitution q := 1, read as a commutative polynomial.
  QPoly eval_one() const {
    std::vector<Term<Rational>> out;
    for (const auto& [w, c] : terms_) out.push_back({w, c.eval_one()});
    return QPoly::from_terms(std::move(out));
  }

 private:
  Map terms_;
};

/// Letters of a sorted word in increasing generator order.
inline std::vector<int> word_letters(const Monomial& w) {
  std::vector<int> out;
  for (int v = 0; v < kMaxVars; ++v)
    for (int k = 0; k < w[v]; ++k) out.push_back(v);
  return out;
}

/// One rewrite y*x -> sum for generators y > x: coefficient and sorted
/// two-letter word (a <= b).
struct RewriteTerm {
  QLaurent coeff;
  int a;
  int b;
};

inline std::vector<RewriteTerm> rewrite_rule(int y, int x, const Ambient& amb) {
  const int k = amb.row_of(y), l = amb.col_of(y), i = amb.row_of(x), j = amb.col_of(x);
  if (k == i || l == j) return {{QLaurent::q_pow(-1), x, y}};
  if (l < j) return {{QLaurent(1), x, y}};
  const QLaurent qq = QLaurent::q_pow(1) - QLaurent::q_pow(-1);
  return {{QLaurent(1), x, y}, {-qq, amb.var(i, l), amb.var(k, j)}};
}

namespace detail {

struct WordGenKey {
  Monomial w;
  int g;
  friend bool operator==(const WordGenKey& a, const WordGenKey& b) { return a.g == b.g && a.w == b.w; }
};
struct WordGenHash {
  std::size_t operator()(const WordGenKey& k) const noexcept { return MonomialHash{}(k.w) * 31 + static_cast<std::size_t>(k.g); }
};
struct WordPairKey {
  Monomial a;
  Monomial b;
  friend bool operator==(const WordPairKey& x, const WordPairKey& y) { return x.a == y.a && x.b == y.b; }
};
struct WordPairHash {
  std::size_t operator()(const WordPairKey& k) const noexcept {
    return MonomialHash{}(k.a) * 1000003ULL ^ MonomialHash{}(k.b);
  }
};

}  // namespace detail

/// Memoized PBW multiplication for one ambient shape.
class QuantumEngine {
 public:
  explicit QuantumEngine(const Ambient& amb) : amb_(amb) { check_ambient(amb); }

  const Ambient& ambient() const { return amb_; }

  /// Normal form of (sorted word w) * X_g.
  const NCPoly& word_times_gen(const Monomial& w, int g) {
    detail::WordGenKey key{w, g};
    if (auto it = wg_.find(key); it != wg_.end()) return it->second;
    NCPoly result;
    int top = -1;
    for (int v = kMaxVars - 1; v >= 0; --v)
      if (w[v] != 0) {
        top = v;
        break;
      }
    if (top <= g) {
      result = NCPoly::word(w * Monomial::var(g));
    } else {
      Monomial rest = w;
      rest.e[static_cast<std::size_t>(top)] -= 1;
      for (const auto& rt : rewrite_rule(top, g, amb_)) {
        const NCPoly first = word_times_gen(rest, rt.a);
        for (const auto& [u, c] : first.terms()) result.add_scaled(word_times_gen(u, rt.b), c * rt.coeff);
      }
    }
    return wg_.emplace(key, std::move(result)).first->second;
  }

  /// Normal form of w1 * w2 for sorted words.
  const NCPoly& word_times_word(const Monomial& a, const Monomial& b) {
    detail::WordPairKey key{a, b};
    if (auto it = ww_.find(key); it != ww_.end()) return it->second;
    NCPoly cur = NCPoly::word(a);
    for (int g : word_letters(b)) {
      NCPoly next;
      for (const auto& [u, c] : cur.terms()) next.add_scaled(word_times_gen(u, g), c);
      cur = std::move(next);
    }
    return ww_.emplace(key, std::move(cur)).first->second;
  }

  NCPoly mul(const NCPoly& f, const NCPoly& g) {
    NCPoly out;
    for (const auto& [a, ca] : f.terms())
      for (const auto& [b, cb] : g.terms()) out.add_scaled(word_times_word(a, b), ca * cb);
    return out;
  }

  /// Normal form of an arbitrary (unsorted) product of generators.
  NCPoly sequence(const std::vector<int>& letters) {
    NCPoly cur = NCPoly::word(Monomial{});
    for (int g : letters) {
      NCPoly next;
      for (const auto& [u, c] : cur.terms()) next.add_scaled(word_times_gen(u, g), c);
      cur = std::move(next);
    }
    return cur;
  }

  std::size_t cache_size() const { return wg_.size() + ww_.size(); }

 private:
  Ambient amb_;
  std::unordered_map<detail::WordGenKey, NCPoly, detail::WordGenHash> wg_;
  std::unordered_map<detail::WordPairKey, NCPoly, detail::WordPairHash> ww_;
};

/// Per-thread engine for an ambient shape.
inline QuantumEngine& engine(const Ambient& amb) {
  thread_local std::map<std::pair<int, int>, std::unique_ptr<QuantumEngine>> engines;
  auto& slot = engines[{amb.m, amb.p}];
  if (!slot) slot = std::make_unique<QuantumEngine>(Ambient{amb.m, amb.p, false});
  return *slot;
}

inline NCPoly nc_mul(const NCPoly& f, const NCPoly& g, const Ambient& amb) { return engine(amb).mul(f, g); }

inline NCPoly nc_normal_form(const std::vector<int>& letters, const Ambient& amb) {
  return engine(amb).sequence(letters);
}

/// Quantum minor: sum over permutations of (-q)^length X_{i1,j_s(1)} ... X_{ik,j_s(k)}.
inline NCPoly q_minor(const MinorIndex& idx, const Ambient& amb) {
  idx.validate(amb);
  std::vector<int> perm(idx.rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  NCPoly out;
  do {
    std::vector<int> letters;
    for (std::size_t k = 0; k < perm.size(); ++k)
      letters.push_back(amb.var(idx.rows[k], idx.cols[static_cast<std::size_t>(perm[k])]));
    const int len = detail::inversion_count(perm);
    QLaurent c = QLaurent(Rational(len % 2 == 0 ? 1 : -1), len);
    out.add_scaled(nc_normal_form(letters, amb), c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline NCPoly q_determinant(int m) {
  Ambient amb{m, m, false};
  std::vector<int> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), 1);
  return q_minor(MinorIndex{all, all}, amb);
}

/// Ordered product of quantum minors with nonnegative exponents.
inline NCPoly nc_expand_product(const MinorProduct& u, const Ambient& amb) {
  NCPoly r = NCPoly(QLaurent(1));
  for (const auto& f : u.factors) {
    if (f.exponent < 0) throw NotMinorProduct("negative exponent in polynomial product " + u.to_string('X'));
    const NCPoly m = q_minor(f.index, amb);
    for (int k = 0; k < f.exponent; ++k) r = nc_mul(r, m, amb);
  }
  return r;
}

/// Transpose X_ij -> X_ji, an algebra automorphism.
inline NCPoly tau_q(const NCPoly& f, const Ambient& amb) {
  if (!amb.square()) throw IndexError("transpose needs a square ambient");
  NCPoly out;
  for (const auto& [w, c] : f.terms()) {
    std::vector<int> letters;
    for (int v : word_letters(w)) letters.push_back(amb.var(amb.col_of(v), amb.row_of(v)));
    out.add_scaled(nc_normal_form(letters, amb), c);
  }
  return out;
}

/// Exhaustive rewriting on unsorted words, choosing either the leftmost or the
/// rightmost descent at every step. Independent of the memoized engine.
inline NCPoly naive_rewrite(const std::vector<int>& letters, const Ambient& amb, bool leftmost) {
  std::map<std::vector<int>, QLaurent> pending{{letters, QLaurent(1)}};
  NCPoly done;
  while (!pending.empty()) {
    auto it = pending.begin();
    std::vector<int> w = it->first;
    QLaurent c = it->second;
    pending.erase(it);
    if (c.is_zero()) continue;
    std::optional<std::size_t> pos;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) {
        pos = k;
        if (leftmost) break;
      }
    }
    if (!pos) {
      Monomial m;
      for (int v : w) m = m * Monomial::var(v);
      done.add_term(m, c);
      continue;
    }
    for (const auto& rt : rewrite_rule(w[*pos], w[*pos + 1], amb)) {
      std::vector<int> nw = w;
      nw[*pos] = rt.a;
      nw[*pos + 1] = rt.b;
      auto [jt, inserted] = pending.emplace(nw, c * rt.coeff);
      if (!inserted) jt->second += c * rt.coeff;
    }
  }
  return done;
}

/// One-sided reduction modulo generators of a two-sided ideal. A word whose
/// leading part is divisible by the leading word of a generator g with unit
/// leading coefficient is replaced through the left multiple u*g. The
/// reduction is linear and memoized per word; a zero result certifies
/// membership, a nonzero result is inconclusive.
class NCReducer {
 public:
  NCReducer(std::vector<NCPoly> gens, const Ambient& amb) : amb_(amb) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (!g.leading_coeff().is_unit()) continue;
      gens_.push_back(std::move(g));
    }
  }

  const std::vector<NCPoly>& generators() const { return gens_; }

  NCPoly reduce(const NCPoly& f) {
    NCPoly out;
    for (const auto& [w, c] : f.terms()) out.add_scaled(reduce_word(w), c);
    return out;
  }

  const NCPoly& reduce_word(const Monomial& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    NCPoly result;
    const NCPoly* chosen = nullptr;
    for (const auto& g : gens_)
      if (g.leading_word().divides(w)) {
        chosen = &g;
        break;
      }
    if (!chosen) {
      result = NCPoly::word(w);
    } else {
      const Monomial u = w / chosen->leading_word();
      NCPoly ug = nc_mul(NCPoly::word(u), *chosen, amb_);
      const QLaurent inv = ug.leading_coeff().unit_inverse();
      // w = w - inv*u*g + inv*u*g, and u*g lies in the ideal.
      NCPoly rest = ug.scaled(-inv);
      rest.add_term(w, QLaurent(1));
      for (const auto& [v, c] : rest.terms()) result.add_scaled(reduce_word(v), c);
    }
    return memo_.emplace(w, std::move(result)).first->second;
  }

 private:
  Ambient amb_;
  std::vector<NCPoly> gens_;
  std::unordered_map<Monomial, NCPoly, MonomialHash> memo_;
};

inline NCPoly nc_reduce_mod(const NCPoly& f, const std::vector<NCPoly>& gens, const Ambient& amb) {
  NCReducer r(gens, amb);
  return r.reduce(f);
}

/// Result of a q-commutation test: the exponent c with uv = q^c vu, or a
/// reason why none was certified.
struct QCommutation {
  std::optional<int> exponent;
  bool inconclusive = false;
  std::string reason;
};

inline QCommutation q_commutation(const NCPoly& u, const NCPoly& v, const Ambient& amb, NCReducer* J = nullptr) {
  NCPoly uv = nc_mul(u, v, amb), vu = nc_mul(v, u, amb);
  if (J) {
    uv = J->reduce(uv);
    vu = J->reduce(vu);
  }
  if (uv.is_zero() && vu.is_zero()) return {std::nullopt, J != nullptr, "both products vanish"};
  if (uv.is_zero() || vu.is_zero()) return {std::nullopt, J != nullptr, "exactly one product vanishes"};
  if (uv.leading_word() != vu.leading_word()) return {std::nullopt, J != nullptr, "leading words differ"};
  QLaurent ratio;
  try {
    ratio = qlaurent_div_exact(uv.leading_coeff(), vu.leading_coeff());
  } catch (const NotDivisible&) {
    return {std::nullopt, J != nullptr, "leading coefficients not proportional"};
  }
  auto mono = ratio.as_monomial();
  if (!mono || mono->second != 1) return {std::nullopt, J != nullptr, "ratio " + ratio.to_string() + " is not a power of q"};
  if (!(uv - vu.scaled(ratio)).is_zero()) return {std::nullopt, J != nullptr, "difference does not vanish"};
  return {mono->first, false, ""};
}

/// The integer c with u*v = q^c v*u (modulo J when given).
inline int q_commutation_exponent(const NCPoly& u, const NCPoly& v, const Ambient& amb, NCReducer* J = nullptr) {
  QCommutation r = q_commutation(u, v, amb, J);
  if (!r.exponent) throw NotQCommuting(std::string(r.inconclusive ? "inconclusive: " : "") + r.reason);
  return *r.exponent;
}

/// (uv - vu)/(q - 1) at q = 1 equals {theta u, theta v}.
inline bool semiclassical_check(const NCPoly& u, const NCPoly& v, const QPoly& tu, const QPoly& tv, const Ambient& amb) {
  const NCPoly comm = nc_mul(u, v, amb) - nc_mul(v, u, amb);
  const QLaurent qm1 = QLaurent::q_pow(1) - QLaurent(1);
  std::vector<Term<Rational>> lim;
  for (const auto& [w, c] : comm.terms()) {
    try {
      lim.push_back({w, qlaurent_div_exact(c, qm1).eval_one()});
    } catch (const NotDivisible&) {
      return false;
    }
  }
  return QPoly::from_terms(std::move(lim)) == bracket(tu, tv, amb);
}

inline bool semiclassical_check(const MinorIndex& u, const MinorIndex& v, const Ambient& amb) {
  return semiclassical_check(q_minor(u, amb), q_minor(v, amb), minor(u, amb), minor(v, amb), amb);
}

/// Render with terms from the leading word down, e.g. "X22*X33 - (q - q^-1)*X23*X32".
inline std::string to_string(const NCPoly& p, const Ambient& amb, char letter = 'X') {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c0] : p.terms()) {
    QLaurent c = c0;
    const bool neg = c.terms().rbegin()->second < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_string(amb, w, letter);
    const bool compound = c.terms().size() > 1;
    const std::string cs = compound ? "(" + c.to_string() + ")" : c.to_string();
    if (mono.empty()) {
      out += cs;
    } else {
      if (!c.is_one()) out += cs + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace strata
