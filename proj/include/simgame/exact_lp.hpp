// Copyright 2026 The simgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef SIMGAME_EXACT_LP_HPP_
#define SIMGAME_EXACT_LP_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "simgame/errors.hpp"
#include "simgame/matrix.hpp"
#include "simgame/rational.hpp"

namespace simgame::lp {

enum class VarKind { kNonneg, kFree };

// Equality system A x = y0 + c * y1 with per-variable sign constraints.
struct LinearSystem {
  Matrix<Rational> a;
  RationalVector rhs_base;
  RationalVector rhs_slope;
  std::vector<VarKind> kinds;

  std::size_t num_rows() const { return a.rows(); }
  std::size_t num_vars() const { return kinds.size(); }

  void validate() const {
    if (a.rows() > 0 && a.cols() != kinds.size()) {
      throw PreconditionError("column count does not match variable count");
    }
    if (rhs_base.size() != a.rows() || rhs_slope.size() != a.rows()) {
      throw PreconditionError("right-hand side does not match row count");
    }
  }

  RationalVector rhs_at(const Rational& c) const {
    RationalVector y(rhs_base);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * rhs_slope[i];
    return y;
  }

  // The same system with the parameter fixed to c.
  LinearSystem fixed_at(const Rational& c) const {
    LinearSystem s{a, rhs_at(c), RationalVector(a.rows(), Rational(0)), kinds};
    return s;
  }
};

// Closed interval over the extended rationals. Missing bounds are infinite.
class Interval {
 public:
  static Interval everything() { return Interval(); }
  static Interval nothing() {
    Interval i;
    i.empty_ = true;
    return i;
  }
  static Interval closed(std::optional<Rational> lo, std::optional<Rational> hi) {
    Interval i;
    i.lo_ = std::move(lo);
    i.hi_ = std::move(hi);
    i.normalize();
    return i;
  }
  static Interval at_least(const Rational& x) { return closed(x, std::nullopt); }
  static Interval at_most(const Rational& x) { return closed(std::nullopt, x); }

  bool empty() const { return empty_; }
  const std::optional<Rational>& lo() const { return lo_; }
  const std::optional<Rational>& hi() const { return hi_; }

  bool contains(const Rational& c) const {
    if (empty_) return false;
    if (lo_ && c < *lo_) return false;
    if (hi_ && c > *hi_) return false;
    return true;
  }
  // True iff [lo, hi] is a subset of this interval.
  bool covers(const Rational& lo, const Rational& hi) const {
    return contains(lo) && contains(hi);
  }

  Interval intersect(const Interval& o) const {
    if (empty_ || o.empty_) return nothing();
    Interval i;
    i.lo_ = lo_;
    if (o.lo_ && (!i.lo_ || *o.lo_ > *i.lo_)) i.lo_ = o.lo_;
    i.hi_ = hi_;
    if (o.hi_ && (!i.hi_ || *o.hi_ < *i.hi_)) i.hi_ = o.hi_;
    i.normalize();
    return i;
  }

  std::string str() const {
    if (empty_) return "empty";
    return std::string("[") + (lo_ ? to_string(*lo_) : "-inf") + ", " +
           (hi_ ? to_string(*hi_) : "+inf") + "]";
  }

  friend bool operator==(const Interval& a, const Interval& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  void normalize() {
    if (lo_ && hi_ && *lo_ > *hi_) {
      empty_ = true;
      lo_.reset();
      hi_.reset();
    }
  }

  bool empty_ = false;
  std::optional<Rational> lo_;
  std::optional<Rational> hi_;
};

struct Unsolvable {
  // Set when the system is consistent for exactly this parameter value.
  std::optional<Rational> only_at;
};

using Basis = std::vector<std::size_t>;

struct ParametricSolution {
  Basis basis;
  RationalVector value_base;
  RationalVector value_slope;
  Interval feasible;

  RationalVector at(const Rational& c) const {
    RationalVector x(value_base);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * value_slope[i];
    return x;
  }
};

struct Vertex {
  RationalVector value;
  std::vector<Basis> bases;
};

// Set of c where every nonnegative variable of base + c * slope is >= 0.
inline Interval feasible_interval(const LinearSystem& s, const RationalVector& base,
                                  const RationalVector& slope) {
  Interval out = Interval::everything();
  for (std::size_t j = 0; j < s.num_vars(); ++j) {
    if (s.kinds[j] != VarKind::kNonneg) continue;
    if (slope[j] == 0) {
      if (base[j] < 0) return Interval::nothing();
    } else if (slope[j] > 0) {
      out = out.intersect(Interval::at_least(-base[j] / slope[j]));
    } else {
      out = out.intersect(Interval::at_most(-base[j] / slope[j]));
    }
    if (out.empty()) return out;
  }
  return out;
}

namespace detail {

// Scales a rational row to integers (denominators cleared).
inline std::vector<Integer> integerize(const RationalVector& row) {
  Integer l = 1;
  for (const auto& x : row) {
    Integer d = boost::multiprecision::denominator(x);
    l = boost::multiprecision::lcm(l, d);
  }
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& x : row) {
    out.push_back(boost::multiprecision::numerator(x) *
                  (l / boost::multiprecision::denominator(x)));
  }
  return out;
}

// Fraction-free elimination in place on an m x k integer matrix over the first
// m columns. Returns the sign of the row permutation, or 0 if singular.
inline int bareiss(std::vector<std::vector<Integer>>& m, std::size_t n) {
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m[i].size(); ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign;
}

}  // namespace detail

inline Rational determinant(const Matrix<Rational>& a) {
  if (a.rows() != a.cols()) throw PreconditionError("determinant of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  std::vector<std::vector<Integer>> m;
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row = a.row(i);
    auto ints = detail::integerize(row);
    // Row i was multiplied by ints[j] / row[j] for any nonzero entry.
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] != 0) {
        scale *= Rational(ints[j]) / row[j];
        break;
      }
    }
    m.push_back(std::move(ints));
  }
  int sign = detail::bareiss(m, n);
  if (sign == 0) return Rational(0);
  return Rational(m[n - 1][n - 1]) * sign / scale;
}

// Solves the square system M X = R (R given by columns); nullopt if singular.
inline std::optional<std::vector<RationalVector>> solve_square(
    const Matrix<Rational>& mat, const std::vector<RationalVector>& rhs) {
  std::size_t n = mat.rows();
  std::vector<std::vector<Integer>> m;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row = mat.row(i);
    for (const auto& r : rhs) row.push_back(r[i]);
    m.push_back(detail::integerize(row));
  }
  if (detail::bareiss(m, n) == 0) return std::nullopt;
  std::vector<RationalVector> out(rhs.size(), RationalVector(n));
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational acc = Rational(m[ii][n + k]);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * out[k][j];
      out[k][ii] = acc / Rational(m[ii][ii]);
    }
  }
  return out;
}

// Keeps a maximal independent subset of the original rows (first occurrences).
inline std::variant<LinearSystem, Unsolvable> row_reduce(const LinearSystem& s) {
  s.validate();
  const std::size_t n = s.num_vars();
  struct Stored {
    std::size_t pivot;
    RationalVector row;
  };
  std::vector<Stored> echelon;
  std::vector<std::size_t> kept;
  bool never = false;
  std::optional<Rational> only_at;
  for (std::size_t i = 0; i < s.num_rows(); ++i) {
    RationalVector r = s.a.row(i);
    r.push_back(s.rhs_base[i]);
    r.push_back(s.rhs_slope[i]);
    for (const auto& e : echelon) {
      if (r[e.pivot] == 0) continue;
      Rational f = r[e.pivot] / e.row[e.pivot];
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (e.row[j] != 0) r[j] -= f * e.row[j];
      }
    }
    std::size_t p = 0;
    while (p < n && r[p] == 0) ++p;
    if (p < n) {
      echelon.push_back({p, std::move(r)});
      kept.push_back(i);
      continue;
    }
    const Rational& d0 = r[n];
    const Rational& d1 = r[n + 1];
    if (d0 == 0 && d1 == 0) continue;
    if (d1 == 0) {
      never = true;
      continue;
    }
    Rational c = -d0 / d1;
    if (only_at && *only_at != c) never = true;
    only_at = c;
  }
  if (never) return Unsolvable{std::nullopt};
  if (only_at) return Unsolvable{only_at};
  LinearSystem out;
  out.kinds = s.kinds;
  out.a = Matrix<Rational>(0, 0);
  for (auto i : kept) {
    out.a.append_row(s.a.row(i));
    out.rhs_base.push_back(s.rhs_base[i]);
    out.rhs_slope.push_back(s.rhs_slope[i]);
  }
  if (kept.empty()) out.a = Matrix<Rational>(0, n);
  return out;
}

inline Matrix<Rational> columns(const Matrix<Rational>& a, const Basis& cols) {
  Matrix<Rational> m(a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = a(i, cols[j]);
  }
  return m;
}

// All column subsets of size num_rows with an invertible submatrix, in
// lexicographic order. Rows must be independent.
inline std::vector<Basis> enumerate_bases(const LinearSystem& s) {
  s.validate();
  const std::size_t m = s.num_rows();
  const std::size_t n = s.num_vars();
  std::vector<Basis> out;
  if (m > n) return out;
  Basis cur(m);
  for (std::size_t i = 0; i < m; ++i) cur[i] = i;
  while (true) {
    if (determinant(columns(s.a, cur)) != 0) out.push_back(cur);
    std::size_t i = m;
    while (i > 0 && cur[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < m; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline ParametricSolution parametric_basic_solution(const LinearSystem& s,
                                                    const Basis& basis) {
  s.validate();
  if (basis.size() != s.num_rows()) {
    throw PreconditionError("basis size does not match row count");
  }
  auto sol = solve_square(columns(s.a, basis), {s.rhs_base, s.rhs_slope});
  if (!sol) throw PreconditionError("basis matrix is singular");
  ParametricSolution p;
  p.basis = basis;
  p.value_base.assign(s.num_vars(), Rational(0));
  p.value_slope.assign(s.num_vars(), Rational(0));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    p.value_base[basis[k]] = (*sol)[0][k];
    p.value_slope[basis[k]] = (*sol)[1][k];
  }
  p.feasible = feasible_interval(s, p.value_base, p.value_slope);
  return p;
}

enum class BasisPolicy {
  // Every basis contains all free columns when they are independent, so each
  // basic solution is a vertex of the feasible region.
  kForceFree,
  kAll,
};

namespace detail {

struct Tableau {
  std::vector<RationalVector> rows;
  std::vector<std::size_t> pivot_col;  // per row, or npos
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

inline bool pivot_on_column(Tableau& t, std::size_t col) {
  std::size_t r = 0;
  while (r < t.rows.size() && (t.pivot_col[r] != kNone || t.rows[r][col] == 0)) ++r;
  if (r == t.rows.size()) return false;
  RationalVector& pr = t.rows[r];
  Rational inv = 1 / pr[col];
  for (auto& x : pr) {
    if (x != 0) x *= inv;
  }
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i == r || t.rows[i][col] == 0) continue;
    Rational f = t.rows[i][col];
    for (std::size_t j = 0; j < pr.size(); ++j) {
      if (pr[j] != 0) t.rows[i][j] -= f * pr[j];
    }
  }
  t.pivot_col[r] = col;
  return true;
}

template <typename Visit>
void dfs_bases(const LinearSystem& s, const Tableau& t, const std::vector<bool>& skip,
               std::size_t start, std::size_t remaining, Visit&& visit) {
  const std::size_t n = s.num_vars();
  if (remaining == 0) {
    visit(t);
    return;
  }
  for (std::size_t j = start; j + remaining <= n; ++j) {
    if (skip[j]) continue;
    bool any = false;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (t.pivot_col[r] == kNone && t.rows[r][j] != 0) {
        any = true;
        break;
      }
    }
    if (!any) continue;
    Tableau next = t;
    pivot_on_column(next, j);
    dfs_bases(s, next, skip, j + 1, remaining - 1, visit);
  }
}

}  // namespace detail

// All basic solutions as affine functions of c, by depth-first Gauss-Jordan
// pivoting over increasing column sets. Rows must be independent.
inline std::vector<ParametricSolution> parametric_solutions(
    const LinearSystem& s, BasisPolicy policy = BasisPolicy::kForceFree) {
  s.validate();
  const std::size_t m = s.num_rows();
  const std::size_t n = s.num_vars();
  detail::Tableau root;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector r = s.a.row(i);
    r.push_back(s.rhs_base[i]);
    r.push_back(s.rhs_slope[i]);
    root.rows.push_back(std::move(r));
  }
  root.pivot_col.assign(m, detail::kNone);
  std::vector<bool> skip(n, false);
  std::size_t forced = 0;
  if (policy == BasisPolicy::kForceFree) {
    detail::Tableau t = root;
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      if (s.kinds[j] != VarKind::kFree) continue;
      ok = detail::pivot_on_column(t, j);
      skip[j] = true;
      ++forced;
    }
    if (ok) {
      root = std::move(t);
    } else {
      skip.assign(n, false);
      forced = 0;
    }
  }
  std::vector<ParametricSolution> out;
  if (m < forced) return out;
  detail::dfs_bases(s, root, skip, 0, m - forced, [&](const detail::Tableau& t) {
    ParametricSolution p;
    p.value_base.assign(n, Rational(0));
    p.value_slope.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
      std::size_t j = t.pivot_col[r];
      p.basis.push_back(j);
      p.value_base[j] = t.rows[r][n];
      p.value_slope[j] = t.rows[r][n + 1];
    }
    std::sort(p.basis.begin(), p.basis.end());
    p.feasible = feasible_interval(s, p.value_base, p.value_slope);
    out.push_back(std::move(p));
  });
  std::sort(out.begin(), out.end(),
            [](const ParametricSolution& a, const ParametricSolution& b) {
              return a.basis < b.basis;
            });
  return out;
}

// Distinct basic feasible solutions at a fixed parameter, sorted by value.
inline std::vector<Vertex> vertices_at(const LinearSystem& s, const Rational& c,
                                       BasisPolicy policy = BasisPolicy::kForceFree) {
  auto reduced = row_reduce(s.fixed_at(c));
  if (std::holds_alternative<Unsolvable>(reduced)) return {};
  const auto& sys = std::get<LinearSystem>(reduced);
  std::map<RationalVector, std::vector<Basis>> found;
  for (auto& p : parametric_solutions(sys, policy)) {
    if (!p.feasible.contains(c)) continue;
    found[p.value_base].push_back(p.basis);
  }
  std::vector<Vertex> out;
  for (auto& [value, bases] : found) out.push_back({value, bases});
  return out;
}

}  // namespace simgame::lp

#endif  // SIMGAME_EXACT_LP_HPP_
