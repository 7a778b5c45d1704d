#include <gtest/gtest.h>

#include "gen.hpp"
#include "oracle.hpp"

using namespace strata;

namespace {

IntVector mat_vec(const IntMatrix& A, const IntVector& m) {
  IntVector out(A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i] += A[i][j] * m[j];
  return out;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::size_t rational_rank(const IntMatrix& A, std::size_t ncols) {
  std::vector<std::vector<Rational>> M;
  for (const auto& r : A) {
    std::vector<Rational> row;
    for (auto x : r) row.push_back(Rational(static_cast<long>(x)));
    M.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < M.size(); ++c) {
    std::size_t p = rank;
    while (p < M.size() && M[p][c] == 0) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[rank]);
    for (std::size_t r = 0; r < M.size(); ++r) {
      if (r == rank || M[r][c] == 0) continue;
      const Rational f = M[r][c] / M[rank][c];
      for (std::size_t t = c; t < ncols; ++t) M[r][t] -= f * M[rank][t];
    }
    ++rank;
  }
  return rank;
}

SkewAlgebra random_skew(gen::Gen& g, int n) {
  SkewAlgebra S;
  S.n = n;
  S.matrix.assign(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int v = g.range(-2, 2);
      S.matrix[i][j] = v;
      S.matrix[j][i] = -v;
    }
  for (int i = 0; i < n; ++i) {
    S.inverted.push_back(g.coin());
    S.labels.push_back(single(MinorIndex::coordinate(1 + i / 3, 1 + i % 3)));
  }
  return S;
}

// Is m an integer combination of the rows of B (B in echelon form)?
bool in_integer_span(IntVector m, const IntMatrix& B) {
  for (const auto& row : B) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    if (m[p] % row[p] != 0) return false;
    const auto f = m[p] / row[p];
    for (std::size_t j = 0; j < m.size(); ++j) m[j] -= f * row[j];
  }
  return is_zero(m);
}

MinorProduct L(const std::string& s) { return parse_minor_product(s, sl3()); }

}  // namespace

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_lattice(IntMatrix{{0, 0}, {0, 0}}), (IntMatrix{{1, 0}, {0, 1}}));
  const IntMatrix gl2 = {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, -1, -1, 0}};
  EXPECT_EQ(kernel_lattice(gl2), (IntMatrix{{1, 0, 0, 0}, {0, 1, -1, 0}}));
  EXPECT_TRUE(kernel_lattice(IntMatrix{{0, 1}, {-1, 0}}).empty());
}

TEST(CentralMonomials, InvertOneVariableInGl2) {
  SkewAlgebra S;
  S.n = 4;
  S.matrix = {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, -1, -1, 0}};
  S.inverted = {false, false, false, true};
  S.labels = {L("[12|12]"), L("Y12"), L("Y21"), L("Y22")};
  const CenterPresentation C = central_monomials(S);
  ASSERT_EQ(C.rank(), 1u);
  EXPECT_EQ(C.generators[0].exponents, (IntVector{1, 0, 0, 0}));
  EXPECT_FALSE(C.generators[0].invertible);
}

TEST(CentralMonomials, SlightlyLocalizedSl3IsTrivial) {
  for (bool transpose : {false, true}) {
    std::vector<MinorProduct> gens = {L("[12|23]"), L("Y13"), L("[23|12]"), L("[23|23]"),
                                      L("Y23"),     L("Y31"), L("Y32"),     L("Y33")};
    if (transpose)
      for (auto& x : gens) x = x.transposed();
    const std::vector<bool> inv = {false, false, false, true, true, false, true, true};
    for (Side side : {Side::Poisson, Side::Quantum}) {
      const SkewAlgebra S = derive_skew(gens, inv, side, {}, sl3());
      EXPECT_TRUE(central_monomials(S).trivial()) << side_name(side) << " " << transpose;
    }
  }
}

TEST(DeriveSkew, CaseIIMatrix) {
  const auto J = hprime(HPrimeId::parse("132,123")).ideal_gens;
  const std::vector<MinorProduct> gens = {L("Y22"), L("Y32"), L("Y33")};
  const IntMatrix expect = {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
  const SkewAlgebra q = derive_skew(gens, {true, false, true}, Side::Quantum, J, sl3());
  const SkewAlgebra p = derive_skew(gens, {true, false, true}, Side::Poisson, J, sl3());
  EXPECT_EQ(q.matrix, expect);
  EXPECT_EQ(p.matrix, expect);
  EXPECT_TRUE(compatible(q, p));
  // W22*W33 spans the kernel and commutes with each generator.
  const CenterPresentation C = central_monomials(q);
  ASSERT_EQ(C.rank(), 1u);
  EXPECT_EQ(C.generators[0].exponents, (IntVector{1, 0, 1}));
  NCReducer red = quantum_ideal(J, sl3());
  const NCPoly z = nc_expand_product(L("Y22*Y33"), sl3());
  for (const auto& x : gens) EXPECT_EQ(q_commutation_exponent(z, nc_expand_product(x, sl3()), sl3(), &red), 0);
}

TEST(DeriveSkew, NotQCommuting) {
  EXPECT_THROW(derive_skew({L("Y11"), L("Y22")}, {false, false}, Side::Quantum, {}, m2()), NotQCommuting);
  EXPECT_THROW(derive_skew({L("Y11"), L("Y22")}, {false, false}, Side::Poisson, {}, m2()), NotLogCommuting);
}

TEST(Compatible, Examples) {
  gen::Gen g(89);
  const SkewAlgebra S = random_skew(g, 4);
  EXPECT_TRUE(compatible(S, S));
  SkewAlgebra N = S;
  for (auto& r : N.matrix)
    for (auto& x : r) x = -x;
  SkewAlgebra Z = S;
  Z.matrix[0][1] = 1;
  Z.matrix[1][0] = -1;
  N.matrix[0][1] = -1;
  N.matrix[1][0] = 1;
  EXPECT_FALSE(compatible(Z, N));
  // Relabelled order does not matter.
  SkewAlgebra R = S;
  std::swap(R.labels[0], R.labels[1]);
  std::swap(R.inverted[0], R.inverted[1]);
  std::swap(R.matrix[0], R.matrix[1]);
  for (auto& r : R.matrix) std::swap(r[0], r[1]);
  EXPECT_TRUE(compatible(S, R));
}

TEST(SkewProperty, KernelLattice) {
  gen::Gen g(97);
  for (int k = 0; k < 200; ++k) {
    const std::size_t rows = static_cast<std::size_t>(g.range(1, 4)), cols = static_cast<std::size_t>(g.range(1, 5));
    IntMatrix A(rows, IntVector(cols, 0));
    for (auto& r : A)
      for (auto& x : r) x = g.range(-3, 3);
    const IntMatrix K = kernel_lattice(A, cols);
    for (const auto& v : K) EXPECT_TRUE(is_zero(mat_vec(A, v)));
    EXPECT_EQ(K.size(), cols - rational_rank(A, cols));
    // Saturation: every small kernel vector is an integer combination.
    for (int t = 0; t < 30; ++t) {
      IntVector m(cols);
      for (auto& x : m) x = g.range(-3, 3);
      if (is_zero(mat_vec(A, m))) { EXPECT_TRUE(in_integer_span(m, hermite_normal_form(K))); }
    }
  }
}

TEST(SkewProperty, CentralMonomials) {
  gen::Gen g(101);
  for (int k = 0; k < 200; ++k) {
    const SkewAlgebra S = random_skew(g, g.range(1, 4));
    const CenterPresentation C = central_monomials(S);
    IntMatrix units;
    for (const auto& z : C.generators) {
      EXPECT_TRUE(is_zero(mat_vec(S.matrix, z.exponents)));
      EXPECT_TRUE(is_central_exponent(S, z.exponents));
      for (int i = 0; i < S.n; ++i)
        if (!S.inverted[i]) { EXPECT_GE(z.exponents[i], 0); }
      if (z.invertible) units.push_back(z.exponents);
    }
    // Box search oracle: central vectors supported on inverted coordinates
    // lie in the span of the unit generators.
    const int n = S.n;
    std::vector<int> m(static_cast<std::size_t>(n), -2);
    for (;;) {
      IntVector v(m.begin(), m.end());
      bool on_units = true;
      for (int i = 0; i < n; ++i)
        if (!S.inverted[i] && v[i] != 0) on_units = false;
      if (on_units && is_zero(mat_vec(S.matrix, v))) { EXPECT_TRUE(in_integer_span(v, hermite_normal_form(units))); }
      int p = 0;
      while (p < n && m[p] == 2) m[p++] = -2;
      if (p == n) break;
      ++m[p];
    }
  }
}
