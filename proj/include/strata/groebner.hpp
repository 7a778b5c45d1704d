#pragma once

// Buchberger's algorithm over an abstract field, with reduction, membership
// and ideal inclusion.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "strata/comm_poly.hpp"

namespace strata {

template <class F>
struct GroebnerBasis {
  std::vector<CommPoly<F>> gens;
  bool reduced = false;

  bool is_unit_ideal() const { return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero(); }
  bool is_zero_ideal() const { return gens.empty(); }
};

/// Remainder of f on division by `divisors` (full reduction of every term).
template <class F>
CommPoly<F> reduce(const CommPoly<F>& f, const std::vector<CommPoly<F>>& divisors) {
  CommPoly<F> p = f;
  std::vector<Term<F>> rem;
  while (!p.is_zero()) {
    const auto lt = p.leading();
    bool divided = false;
    for (const auto& g : divisors) {
      if (g.is_zero() || !g.lm().divides(lt.mono)) continue;
      p = p - g.times_term(lt.mono / g.lm(), lt.coeff / g.lc());
      divided = true;
      break;
    }
    if (!divided) {
      rem.push_back(lt);
      p = p - CommPoly<F>::monomial(lt.mono, lt.coeff);
    }
  }
  return CommPoly<F>::from_terms(std::move(rem));
}

template <class F>
CommPoly<F> normal_form(const CommPoly<F>& f, const GroebnerBasis<F>& G) {
  return reduce(f, G.gens);
}

template <class F>
CommPoly<F> s_polynomial(const CommPoly<F>& f, const CommPoly<F>& g) {
  using Tr = FieldTraits<F>;
  const Monomial l = Monomial::lcm(f.lm(), g.lm());
  return f.times_term(l / f.lm(), Tr::one() / f.lc()) - g.times_term(l / g.lm(), Tr::one() / g.lc());
}

namespace detail {

template <class F>
std::vector<CommPoly<F>> interreduce(std::vector<CommPoly<F>> basis) {
  // Drop elements whose leading monomial is divisible by another's.
  std::sort(basis.begin(), basis.end(),
            [](const CommPoly<F>& a, const CommPoly<F>& b) { return grevlex_cmp(a.lm(), b.lm()) < 0; });
  std::vector<CommPoly<F>> minimal;
  for (const auto& g : basis) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.lm().divides(g.lm())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  std::vector<CommPoly<F>> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<CommPoly<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    // Leading term is untouched since no other leading monomial divides it.
    const auto& g = minimal[i];
    CommPoly<F> head = CommPoly<F>::monomial(g.lm(), g.lc());
    CommPoly<F> tail = reduce(g - head, others);
    out.push_back((head + tail).monic());
  }
  std::sort(out.begin(), out.end(),
            [](const CommPoly<F>& a, const CommPoly<F>& b) { return grevlex_cmp(a.lm(), b.lm()) < 0; });
  return out;
}

}  // namespace detail

/// Reduced Groebner basis in grevlex order, using the coprime-leading-monomial
/// criterion and the chain criterion to skip pairs.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<CommPoly<F>>& input) {
  std::vector<CommPoly<F>> G;
  for (const auto& f : input) {
    if (f.is_zero()) continue;
    CommPoly<F> r = reduce(f, G);
    if (r.is_zero()) continue;
    if (r.is_constant()) return GroebnerBasis<F>{{CommPoly<F>(FieldTraits<F>::one())}, true};
    G.push_back(r.monic());
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto chain_skip = [&](std::size_t i, std::size_t j, const std::vector<std::pair<std::size_t, std::size_t>>& pending) {
    const Monomial l = Monomial::lcm(G[i].lm(), G[j].lm());
    auto is_pending = [&](std::size_t a, std::size_t b) {
      if (a > b) std::swap(a, b);
      return std::find(pending.begin(), pending.end(), std::make_pair(a, b)) != pending.end();
    };
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (k == i || k == j) continue;
      if (!G[k].lm().divides(l)) continue;
      if (!is_pending(i, k) && !is_pending(j, k)) return true;
    }
    return false;
  };

  while (!pairs.empty()) {
    // Normal selection: smallest lcm first.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Monomial a = Monomial::lcm(G[pairs[k].first].lm(), G[pairs[k].second].lm());
      const Monomial b = Monomial::lcm(G[pairs[best].first].lm(), G[pairs[best].second].lm());
      if (grevlex_cmp(a, b) < 0) best = k;
    }
    const auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (Monomial::coprime(G[i].lm(), G[j].lm())) continue;
    if (chain_skip(i, j, pairs)) continue;
    CommPoly<F> r = reduce(s_polynomial(G[i], G[j]), G);
    if (r.is_zero()) continue;
    if (r.is_constant()) return GroebnerBasis<F>{{CommPoly<F>(FieldTraits<F>::one())}, true};
    G.push_back(r.monic());
    const std::size_t n = G.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, n);
  }
  return GroebnerBasis<F>{detail::interreduce(std::move(G)), true};
}

template <class F>
bool member(const CommPoly<F>& f, const GroebnerBasis<F>& G) {
  return normal_form(f, G).is_zero();
}

template <class F>
bool ideal_contains(const GroebnerBasis<F>& A, const std::vector<CommPoly<F>>& B) {
  return std::all_of(B.begin(), B.end(), [&](const CommPoly<F>& b) { return member(b, A); });
}

template <class F>
bool same_ideal(const GroebnerBasis<F>& A, const GroebnerBasis<F>& B) {
  return ideal_contains(A, B.gens) && ideal_contains(B, A.gens);
}

}  // namespace strata
