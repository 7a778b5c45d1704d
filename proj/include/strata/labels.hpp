#pragma once

// Index data for minors and ordered products of minors with integer
// exponents. The same labels name quantum and commutative elements.

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "strata/comm_poly.hpp"
#include "strata/error.hpp"

namespace strata {

/// [rows|cols]; a 1x1 minor is a single coordinate.
struct MinorIndex {
  std::vector<int> rows;
  std::vector<int> cols;

  static MinorIndex coordinate(int i, int j) { return MinorIndex{{i}, {j}}; }
  int size() const { return static_cast<int>(rows.size()); }
  bool is_coordinate() const { return rows.size() == 1; }

  void validate(const Ambient& a) const {
    if (rows.size() != cols.size() || rows.empty()) throw IndexError("minor index sets must be nonempty and of equal size");
    auto strict = [](const std::vector<int>& v) {
      for (std::size_t k = 1; k < v.size(); ++k)
        if (v[k] <= v[k - 1]) return false;
      return true;
    };
    if (!strict(rows) || !strict(cols)) throw IndexError("minor index sets must be strictly increasing");
    if (rows.front() < 1 || rows.back() > a.m || cols.front() < 1 || cols.back() > a.p)
      throw IndexError("minor index out of range for " + std::to_string(a.m) + "x" + std::to_string(a.p) + " matrix");
  }

  std::string to_string(char letter = 'Y') const {
    std::string s;
    if (is_coordinate()) return std::string(1, letter) + std::to_string(rows[0]) + std::to_string(cols[0]);
    s = "[";
    for (int r : rows) s += std::to_string(r);
    s += "|";
    for (int c : cols) s += std::to_string(c);
    return s + "]";
  }

  MinorIndex transposed() const { return MinorIndex{cols, rows}; }

  friend bool operator==(const MinorIndex& a, const MinorIndex& b) { return a.rows == b.rows && a.cols == b.cols; }
  friend bool operator!=(const MinorIndex& a, const MinorIndex& b) { return !(a == b); }
  /// Canonical sort: by row set, then column set.
  friend bool operator<(const MinorIndex& a, const MinorIndex& b) {
    return std::tie(a.rows, a.cols) < std::tie(b.rows, b.cols);
  }
};

struct MinorFactor {
  MinorIndex index;
  int exponent = 1;
  friend bool operator==(const MinorFactor& a, const MinorFactor& b) {
    return a.index == b.index && a.exponent == b.exponent;
  }
};

/// Ordered product of minors with nonzero integer exponents.
struct MinorProduct {
  std::vector<MinorFactor> factors;

  bool is_one() const { return factors.empty(); }
  bool has_inverse() const {
    return std::any_of(factors.begin(), factors.end(), [](const MinorFactor& f) { return f.exponent < 0; });
  }
  /// Positive-exponent part, in stored order.
  MinorProduct numerator() const {
    MinorProduct r;
    for (const auto& f : factors)
      if (f.exponent > 0) r.factors.push_back(f);
    return r;
  }
  /// Negative-exponent part with exponents negated, in stored order.
  MinorProduct denominator() const {
    MinorProduct r;
    for (const auto& f : factors)
      if (f.exponent < 0) r.factors.push_back({f.index, -f.exponent});
    return r;
  }
  MinorProduct inverse() const {
    MinorProduct r;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) r.factors.push_back({it->index, -it->exponent});
    return r;
  }
  MinorProduct transposed() const {
    MinorProduct r;
    for (const auto& f : factors) r.factors.push_back({f.index.transposed(), f.exponent});
    return r;
  }
  /// Concatenation, merging equal adjacent factors.
  friend MinorProduct operator*(const MinorProduct& a, const MinorProduct& b) {
    MinorProduct r = a;
    for (const auto& f : b.factors) {
      if (!r.factors.empty() && r.factors.back().index == f.index) {
        r.factors.back().exponent += f.exponent;
        if (r.factors.back().exponent == 0) r.factors.pop_back();
      } else {
        r.factors.push_back(f);
      }
    }
    return r;
  }

  std::string to_string(char letter = 'Y') const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& f : factors) {
      if (!s.empty()) s += "*";
      s += f.index.to_string(letter);
      if (f.exponent != 1) s += "^" + std::to_string(f.exponent);
    }
    return s;
  }

  friend bool operator==(const MinorProduct& a, const MinorProduct& b) { return a.factors == b.factors; }
  friend bool operator!=(const MinorProduct& a, const MinorProduct& b) { return !(a == b); }
};

inline MinorProduct single(const MinorIndex& m, int exponent = 1) { return MinorProduct{{{m, exponent}}}; }

/// Torus weight vector: e_i for each row i, then f_j for each column j.
using Degree = std::vector<int>;

inline Degree reduce_degree(Degree d, const Ambient& a) {
  // Representative of the class modulo the all-ones vector with minimum entry 0.
  if (a.special && !d.empty()) {
    const int t = *std::min_element(d.begin(), d.end());
    for (auto& x : d) x -= t;
  }
  return d;
}

inline Degree minor_degree(const MinorIndex& m, const Ambient& a) {
  Degree d(static_cast<std::size_t>(a.m + a.p), 0);
  for (int r : m.rows) d[static_cast<std::size_t>(r - 1)] += 1;
  for (int c : m.cols) d[static_cast<std::size_t>(a.m + c - 1)] += 1;
  return d;
}

inline Degree product_degree(const MinorProduct& u, const Ambient& a) {
  Degree d(static_cast<std::size_t>(a.m + a.p), 0);
  for (const auto& f : u.factors) {
    const Degree g = minor_degree(f.index, a);
    for (std::size_t k = 0; k < d.size(); ++k) d[k] += f.exponent * g[k];
  }
  return reduce_degree(d, a);
}

inline std::string degree_string(const Degree& d, const Ambient& a) {
  std::string s;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 0) continue;
    const bool row = static_cast<int>(k) < a.m;
    const int idx = row ? static_cast<int>(k) + 1 : static_cast<int>(k) - a.m + 1;
    std::string name = std::string(row ? "e" : "f") + std::to_string(idx);
    if (!s.empty()) s += d[k] > 0 ? "+" : "-";
    else if (d[k] < 0) s += "-";
    const int mag = d[k] < 0 ? -d[k] : d[k];
    if (mag != 1) s += std::to_string(mag);
    s += name;
  }
  return s.empty() ? "0" : s;
}

}  // namespace strata
