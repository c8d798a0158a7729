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
#include <gtest/gtest.h>

#include <random>

#include "simgame/simgame.hpp"
#include "support.hpp"

namespace simgame {
namespace {

using lp::LinearSystem;
using lp::VarKind;
using testing::R;

Matrix<Rational> mat(const std::vector<std::vector<long>>& rows) {
  Matrix<Rational> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

LinearSystem nonneg(const std::vector<std::vector<long>>& a, const std::vector<long>& b,
                    const std::vector<long>& slope = {}) {
  LinearSystem s;
  s.a = mat(a);
  for (auto x : b) s.rhs_base.push_back(x);
  for (std::size_t i = 0; i < b.size(); ++i) {
    s.rhs_slope.push_back(slope.empty() ? R(0) : R(slope[i]));
  }
  s.kinds.assign(a.front().size(), VarKind::kNonneg);
  return s;
}

// Laplace expansion along the first row.
Rational cofactor_det(const Matrix<Rational>& m) {
  std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<Rational> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, k = 0; c < n; ++c) {
        if (c != j) minor(r - 1, k++) = m(r, c);
      }
    }
    Rational t = m(0, j) * cofactor_det(minor);
    total += j % 2 == 0 ? t : -t;
  }
  return total;
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-9, 9);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      Matrix<Rational> m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(d(rng), 1 + rng() % 3);
      }
      EXPECT_EQ(lp::determinant(m), cofactor_det(m));
    }
  }
  EXPECT_EQ(lp::determinant(mat({{1, 2}, {2, 4}})), R(0));
}

TEST(RowReduce, DropsDuplicateRow) {
  auto r = lp::row_reduce(nonneg({{1, 1}, {1, 1}}, {1, 1}));
  auto* s = std::get_if<LinearSystem>(&r);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->num_rows(), 1u);
}

TEST(RowReduce, DetectsInconsistency) {
  auto r = lp::row_reduce(nonneg({{1, 1}, {1, 1}}, {1, 2}));
  auto* u = std::get_if<lp::Unsolvable>(&r);
  ASSERT_NE(u, nullptr);
  EXPECT_FALSE(u->only_at.has_value());
  // x + y = 1 and x + y = 1 + c agree only at c = 0.
  auto p = lp::row_reduce(nonneg({{1, 1}, {1, 1}}, {1, 1}, {0, 1}));
  auto* q = std::get_if<lp::Unsolvable>(&p);
  ASSERT_NE(q, nullptr);
  ASSERT_TRUE(q->only_at.has_value());
  EXPECT_EQ(*q->only_at, R(0));
}

TEST(Bases, OneByOne) {
  auto b = lp::enumerate_bases(nonneg({{5}}, {10}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], lp::Basis{0});
}

TEST(Bases, CountMatchesNonsingularSubsets) {
  // Columns 0 and 2 are parallel, so {0, 2} is not a basis.
  auto b = lp::enumerate_bases(nonneg({{1, 0, 2}, {0, 1, 0}}, {1, 1}));
  EXPECT_EQ(b, (std::vector<lp::Basis>{{0, 1}, {1, 2}}));
}

TEST(Vertices, SimplexCorners) {
  auto v = lp::vertices_at(nonneg({{1, 1, 1}}, {1}), 0);
  ASSERT_EQ(v.size(), 3u);
  std::set<RationalVector> got;
  for (const auto& x : v) got.insert(x.value);
  EXPECT_EQ(got, (std::set<RationalVector>{{R(1), R(0), R(0)}, {R(0), R(1), R(0)}, {R(0), R(0), R(1)}}));
}

TEST(Vertices, InfeasibleIsEmpty) {
  EXPECT_TRUE(lp::vertices_at(nonneg({{1, 1}}, {-1}), 0).empty());
}

TEST(Vertices, DegenerateVertexKeepsAllBases) {
  // x + y + z = 1, x - y = 0 has (0, 0, 1) from two bases.
  auto v = lp::vertices_at(nonneg({{1, 1, 1}, {1, -1, 0}}, {1, 0}), 0);
  bool found = false;
  for (const auto& x : v) {
    if (x.value == RationalVector{R(0), R(0), R(1)}) {
      found = true;
      EXPECT_GE(x.bases.size(), 2u);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Parametric, SolutionIsAffineWithFeasibleInterval) {
  // x + y = 1, x - y = c: x = (1 + c) / 2, y = (1 - c) / 2 on [-1, 1].
  auto s = nonneg({{1, 1}, {1, -1}}, {1, 0}, {0, 1});
  auto p = lp::parametric_basic_solution(s, {0, 1});
  EXPECT_EQ(p.value_base, (RationalVector{R(1, 2), R(1, 2)}));
  EXPECT_EQ(p.value_slope, (RationalVector{R(1, 2), R(-1, 2)}));
  EXPECT_EQ(p.feasible, lp::Interval::closed(R(-1), R(1)));
  EXPECT_EQ(p.at(R(1, 3)), (RationalVector{R(2, 3), R(1, 3)}));
}

TEST(Parametric, TableauAgreesWithBareissRoute) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<std::vector<long>> a(2, std::vector<long>(4));
    for (auto& row : a) {
      for (auto& x : row) x = d(rng);
    }
    auto s = nonneg(a, {d(rng), d(rng)}, {d(rng), d(rng)});
    auto reduced = lp::row_reduce(s);
    if (!std::holds_alternative<LinearSystem>(reduced)) continue;
    const auto& rs = std::get<LinearSystem>(reduced);
    auto fast = lp::parametric_solutions(rs);
    std::size_t feasible = 0;
    for (const auto& basis : lp::enumerate_bases(rs)) {
      auto slow = lp::parametric_basic_solution(rs, basis);
      if (slow.feasible.empty()) continue;
      ++feasible;
      bool match = std::any_of(fast.begin(), fast.end(), [&](const lp::ParametricSolution& f) {
        return f.basis == basis && f.value_base == slow.value_base &&
               f.value_slope == slow.value_slope && f.feasible == slow.feasible;
      });
      EXPECT_TRUE(match);
    }
    auto nonempty = std::count_if(fast.begin(), fast.end(), [](const lp::ParametricSolution& f) {
      return !f.feasible.empty();
    });
    EXPECT_EQ(static_cast<std::size_t>(nonempty), feasible);
  }
}

TEST(Interval, Operations) {
  auto i = lp::Interval::closed(R(0), R(2)).intersect(lp::Interval::at_least(R(1)));
  EXPECT_TRUE(i.contains(R(3, 2)));
  EXPECT_FALSE(i.contains(R(1, 2)));
  EXPECT_TRUE(lp::Interval::closed(R(2), R(1)).empty());
  EXPECT_TRUE(lp::Interval::everything().covers(R(-5), R(5)));
}

}  // namespace
}  // namespace simgame
