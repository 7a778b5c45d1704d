#include <gtest/gtest.h>

#include <map>

#include "gen.hpp"

using namespace strata;

namespace {

const QLaurent q = QLaurent::q_pow(1);
const QLaurent qi = QLaurent::q_pow(-1);

NCPoly X(int i, int j, const Ambient& amb) { return NCPoly::generator(amb.var(i, j)); }
NCPoly Q(const std::string& s, const Ambient& amb = m3()) { return eval_quantum(parse_expr(s, amb), amb); }
NCPoly word(std::vector<int> w) {
  Monomial m;
  for (int v : w) m = m * Monomial::var(v);
  return NCPoly::word(m);
}

// Reference normal form: relations written out from the defining
// presentation, applied by recursive bubble sort on the first descent.
class Oracle {
 public:
  explicit Oracle(const Ambient& amb) : amb_(amb) {}

  std::map<std::vector<int>, QLaurent> normal(const std::vector<int>& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    std::map<std::vector<int>, QLaurent> out;
    std::size_t k = 0;
    while (k + 1 < w.size() && w[k] <= w[k + 1]) ++k;
    if (k + 1 >= w.size()) {
      out[w] = QLaurent(1);
    } else {
      for (const auto& [pair, c] : swap(w[k], w[k + 1])) {
        std::vector<int> v = w;
        v[k] = pair.first;
        v[k + 1] = pair.second;
        for (const auto& [u, d] : normal(v)) out[u] += c * d;
      }
      for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return memo_[w] = out;
  }

 private:
  // y > x in the PBW order; returns y*x as a combination of two-letter words.
  std::vector<std::pair<std::pair<int, int>, QLaurent>> swap(int y, int x) {
    const int i = amb_.row_of(x), j = amb_.col_of(x), k = amb_.row_of(y), l = amb_.col_of(y);
    if (i == k) return {{{x, y}, qi}};      // X_il X_ij = q^-1 X_ij X_il
    if (j == l) return {{{x, y}, qi}};      // X_kj X_ij = q^-1 X_ij X_kj
    if (l < j) return {{{x, y}, QLaurent(1)}};
    return {{{x, y}, QLaurent(1)}, {{amb_.var(i, l), amb_.var(k, j)}, qi - q}};
  }

  Ambient amb_;
  std::map<std::vector<int>, std::map<std::vector<int>, QLaurent>> memo_;
};

NCPoly from_map(const std::map<std::vector<int>, QLaurent>& m) {
  NCPoly p;
  for (const auto& [w, c] : m) p += word(w).scaled(c);
  return p;
}

}  // namespace

TEST(NormalForm, Examples) {
  const Ambient M2 = m2();
  const int a = 0, b = 1, c = 2, d = 3;
  EXPECT_EQ(nc_normal_form({d, a}, M2), word({a, d}) - word({b, c}).scaled(q - qi));
  EXPECT_EQ(nc_normal_form({b, a}, M2), word({a, b}).scaled(qi));
  EXPECT_EQ(nc_normal_form({a, b, d}, M2), word({a, b, d}));
  EXPECT_EQ(to_string(nc_normal_form({d, a}, M2), M2), "X11*X22 - (q - q^-1)*X12*X21");
}

TEST(Mul, Examples) {
  const Ambient M2 = m2();
  EXPECT_EQ(nc_mul(X(1, 1, M2), X(2, 2, M2), M2), word({0, 3}));
  EXPECT_EQ(nc_mul(X(2, 2, M2), X(1, 1, M2), M2), word({0, 3}) - word({1, 2}).scaled(q - qi));
}

TEST(QMinor, Examples) {
  const Ambient M2 = m2();
  EXPECT_EQ(q_determinant(2), word({0, 3}) - word({1, 2}).scaled(q));
  EXPECT_EQ(to_string(q_minor(MinorIndex{{2, 3}, {2, 3}}, m3()), m3()), "X22*X33 - q*X23*X32");
  EXPECT_EQ(q_determinant(3).size(), 6u);
  for (int m : {2, 3}) {
    const Ambient A{m, m, false};
    const NCPoly D = q_determinant(m);
    for (int v = 0; v < A.nvars(); ++v) {
      const NCPoly x = NCPoly::generator(v);
      EXPECT_TRUE((nc_mul(x, D, A) - nc_mul(D, x, A)).is_zero());
    }
  }
  (void)M2;
}

TEST(QCommutation, Examples) {
  const Ambient M2 = m2();
  EXPECT_EQ(q_commutation_exponent(X(1, 1, M2), X(1, 2, M2), M2), 1);
  EXPECT_EQ(q_commutation_exponent(X(1, 2, M2), X(2, 1, M2), M2), 0);
  EXPECT_THROW(q_commutation_exponent(X(1, 1, M2), X(2, 2, M2), M2), NotQCommuting);
  NCReducer J132(quantum_ideal(hprime(HPrimeId::parse("132,132")).ideal_gens, sl3()));
  EXPECT_EQ(q_commutation_exponent(X(1, 1, sl3()), X(2, 2, sl3()), sl3(), &J132), 0);
}

TEST(ReduceMod, Examples) {
  const Ambient A = m3();
  EXPECT_TRUE(nc_reduce_mod(X(3, 1, A), {X(3, 1, A)}, A).is_zero());
  EXPECT_TRUE(nc_reduce_mod(Q("[23|12]"), {X(2, 1, A), X(3, 1, A)}, A).is_zero());
  EXPECT_EQ(nc_reduce_mod(X(1, 1, A), {X(3, 1, A)}, A), X(1, 1, A));
}

TEST(Semiclassical, Examples) {
  const Ambient M2 = m2();
  EXPECT_TRUE(semiclassical_check(MinorIndex::coordinate(1, 1), MinorIndex::coordinate(2, 2), M2));
  EXPECT_TRUE(semiclassical_check(MinorIndex::coordinate(1, 2), MinorIndex::coordinate(2, 1), M2));
  EXPECT_TRUE(semiclassical_check(MinorIndex::coordinate(1, 1), MinorIndex{{2, 3}, {2, 3}}, m3()));
  // A wrong classical partner is rejected.
  EXPECT_FALSE(semiclassical_check(X(1, 1, M2), X(2, 2, M2), QPoly::variable(0), QPoly::variable(1), M2));
}

TEST(Semiclassical, AllPairsInM3) {
  const Ambient A = m3();
  std::vector<MinorIndex> gens, minors;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) gens.push_back(MinorIndex::coordinate(i, j));
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b) EXPECT_TRUE(semiclassical_check(gens[a], gens[b], A));
  for (const auto& r : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}})
    for (const auto& c : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}})
      for (const auto& g : gens) EXPECT_TRUE(semiclassical_check(g, MinorIndex{r, c}, A));
}

TEST(QuantumProperty, ConfluenceOnAllTriples) {
  const Ambient A = m3();
  Oracle oracle(A);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      for (int c = 0; c < 9; ++c) {
        const NCPoly x = NCPoly::generator(a), y = NCPoly::generator(b), z = NCPoly::generator(c);
        const NCPoly left = nc_mul(nc_mul(x, y, A), z, A), right = nc_mul(x, nc_mul(y, z, A), A);
        ASSERT_EQ(left, right) << a << b << c;
        ASSERT_EQ(left, from_map(oracle.normal({a, b, c}))) << a << b << c;
        ASSERT_EQ(naive_rewrite({a, b, c}, A, true), naive_rewrite({a, b, c}, A, false));
      }
}

TEST(QuantumProperty, AssociativityOnRandomPolynomials) {
  gen::Gen g(61);
  const Ambient A = m3();
  for (int k = 0; k < 100; ++k) {
    const NCPoly f = g.ncpoly(A), h = g.ncpoly(A), e = g.ncpoly(A);
    EXPECT_EQ(nc_mul(nc_mul(f, h, A), e, A), nc_mul(f, nc_mul(h, e, A), A));
  }
}

TEST(QuantumProperty, NormalFormMatchesOracle) {
  gen::Gen g(67);
  const Ambient A = m3();
  Oracle oracle(A);
  for (int k = 0; k < 200; ++k) {
    const auto w = g.word(A, g.range(2, 5));
    EXPECT_EQ(nc_normal_form(w, A), from_map(oracle.normal(w)));
  }
}

TEST(QuantumProperty, TransposeIsAlgebraMap) {
  gen::Gen g(71);
  const Ambient A = m3();
  for (int k = 0; k < 100; ++k) {
    const NCPoly f = g.ncpoly(A), h = g.ncpoly(A);
    EXPECT_EQ(tau_q(nc_mul(f, h, A), A), nc_mul(tau_q(f, A), tau_q(h, A), A));
  }
  EXPECT_EQ(tau_q(q_determinant(3), A), q_determinant(3));
}

TEST(QuantumProperty, RewritingPreservesDegree) {
  gen::Gen g(73);
  const Ambient A = m3();
  auto degree = [&](const Monomial& w) {
    Degree d(6, 0);
    for (int v = 0; v < 9; ++v) {
      d[static_cast<std::size_t>(A.row_of(v) - 1)] += w[v];
      d[static_cast<std::size_t>(3 + A.col_of(v) - 1)] += w[v];
    }
    return d;
  };
  for (int k = 0; k < 200; ++k) {
    const auto w = g.word(A, g.range(2, 5));
    Monomial m;
    for (int v : w) m = m * Monomial::var(v);
    const NCPoly nf = nc_normal_form(w, A);
    for (const auto& [u, c] : nf.terms()) EXPECT_EQ(degree(u), degree(m));
  }
  for (int k = 0; k < 50; ++k) {
    const MinorIndex idx = g.minor_index(A);
    const Degree expect = minor_degree(idx, A);
    const NCPoly qm = q_minor(idx, A);
    for (const auto& [u, c] : qm.terms()) EXPECT_EQ(degree(u), expect);
  }
}
