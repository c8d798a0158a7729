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

#include "simgame/simgame.hpp"
#include "support.hpp"

namespace simgame {
namespace {

using testing::make_game;
using testing::R;

TEST(Classify, TrustGame) {
  auto r = classify(gen_trust());
  EXPECT_TRUE(r.is_generalized_trust_game);
  EXPECT_FALSE(r.is_zero_sum);
  EXPECT_FALSE(r.is_generic);
  EXPECT_FALSE(r.has_br_tiebreaking);
  EXPECT_EQ(r.upper_threshold, R(25));
  EXPECT_EQ(r.commitment_outcomes, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}}));
}

TEST(Classify, MatchingPenniesAndCommitmentGame) {
  auto mp = classify(make_game({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}));
  EXPECT_TRUE(mp.is_zero_sum);
  EXPECT_FALSE(mp.is_generalized_trust_game);
  EXPECT_FALSE(classify(gen_commitment()).is_generalized_trust_game);
}

TEST(Construct, TrustGameCaseB) {
  auto t = construct_trust_sim_ne(gen_trust(), 5);
  EXPECT_EQ(t.construction_case, 'B');
  EXPECT_EQ(t.optimal_commitments, ActionSet{0});
  EXPECT_EQ(t.unique_responses, ActionSet{0});
  EXPECT_EQ(t.v2, R(25));
  ASSERT_TRUE(t.auxiliary.has_value());
  EXPECT_EQ(t.auxiliary->n1(), 1u);
  EXPECT_EQ(t.auxiliary->n2(), 1u);
  const auto& k = t.candidates.front();
  EXPECT_EQ(k.p, R(5, 6));
  EXPECT_EQ(k.alpha, R(1, 150));
  EXPECT_EQ(k.eta, R(150));
  EXPECT_TRUE(k.verified);
  EXPECT_EQ(t.equilibrium.p1.weights(), (RationalVector{R(1, 6), R(0), R(5, 6)}));
  EXPECT_EQ(t.equilibrium.p2.weights(), (RationalVector{R(29, 30), R(1, 30)}));
}

TEST(Construct, MatchesTripletThresholdWhenAuxiliaryIsOneByOne) {
  Game g = gen_trust();
  auto t = construct_trust_sim_ne(g, 1);
  EXPECT_EQ(t.candidates.front().p, threshold_probability(g, 0, 0, 1, DeviationClass::kGreater));
}

TEST(Construct, FailsAboveTheFirstBreakpoint) {
  EXPECT_THROW(construct_trust_sim_ne(gen_trust(), 25), VerificationError);
  EXPECT_THROW(construct_trust_sim_ne(gen_commitment(), 1), PreconditionError);
  EXPECT_THROW(construct_trust_sim_ne(gen_trust(), 0), PreconditionError);
}

TEST(Construct, CaseAWithDisjointResponses) {
  // Two cooperative actions C1 and C2 need different trusting replies T1 and
  // T2, so no P1 action answers both optimal commitments.
  Game g = make_game({{25, -10, -150}, {-10, 25, -150}, {0, 0, 0}},
                     {{25, 0, 150}, {0, 25, 150}, {0, 0, 0}});
  auto cl = classify(g);
  ASSERT_TRUE(cl.is_generalized_trust_game);
  auto t = construct_trust_sim_ne(g, R(1, 10));
  EXPECT_EQ(t.construction_case, 'A');
  EXPECT_TRUE(t.unique_responses.empty());
  EXPECT_EQ(t.equilibrium.p1[3], 1);
  EXPECT_EQ(t.equilibrium.p2.weights(), (RationalVector{R(1, 2), R(1, 2), R(0)}));
  EXPECT_TRUE(is_nash(build(g, R(1, 10), default_policy(g)).augmented, t.equilibrium));
}

TEST(Construct, ConvergesTowardsCommitmentOutcome) {
  Game g = gen_trust();
  Rational prev_gap = -1;
  for (long k = 0; k <= 6; ++k) {
    Rational c = Rational(1, 1L << k);
    auto t = construct_trust_sim_ne(g, c);
    auto [u1, u2] = expected_utility(build(g, c, default_policy(g)).augmented, t.equilibrium);
    Rational gap = abs(25 - u1) + abs(25 - u2);
    if (prev_gap >= 0) {
      EXPECT_LT(gap, prev_gap);
    }
    prev_gap = gap;
    EXPECT_GT(u1, 0);
    EXPECT_GT(u2, 0);
  }
}

TEST(ZeroSumBounds, GuessNumberAndMatchingPennies) {
  auto v = zero_sum_bounds(gen_guess_number(3), R(1, 10));
  EXPECT_EQ(v.value, R(-1, 3));
  EXPECT_TRUE(v.holds);
  auto mp = zero_sum_bounds(gen_guess_number(2), R(1, 2));
  EXPECT_EQ(mp.value, R(0));
  bool simulating = false;
  for (const auto& c : mp.components) {
    if (simulates(c.component)) {
      simulating = true;
      EXPECT_EQ(c.min_u1_margin, R(1, 2));
    }
  }
  EXPECT_TRUE(simulating);
  // Above the threshold the equilibria are the base game's, at value v.
  auto high = zero_sum_bounds(gen_guess_number(3), R(5));
  for (const auto& c : high.components) EXPECT_EQ(c.min_u1_margin, 0);
  EXPECT_THROW(zero_sum_bounds(gen_trust(), 1), PreconditionError);
}

TEST(ZeroSumBounds, HoldOnCorpusZeroSumGames) {
  for (const auto& [name, g] : default_corpus()) {
    if (!is_zero_sum(g)) continue;
    Rational hi = upper_threshold(g) + 1;
    for (int k = 0; k < 10; ++k) {
      EXPECT_TRUE(zero_sum_bounds(g, -1 + (hi + 1) * Rational(k, 9)).holds) << name;
    }
  }
}

TEST(Welfare, TrustGameGrid) {
  Game g = gen_trust();
  auto r = welfare_report(g, default_policy(g), {R(0), R(5), R(150, 7), R(25)});
  EXPECT_EQ(r.base_u1, std::make_pair(R(0), R(0)));
  auto has = [&](std::size_t i, const std::string& verdict) {
    for (const auto& c : r.grid[i].components) {
      if (c.simulates && c.verdict == verdict) return true;
    }
    return false;
  };
  EXPECT_TRUE(has(0, "pareto-better"));
  EXPECT_TRUE(has(1, "pareto-better"));
  for (const auto& c : r.grid[3].components) {
    EXPECT_FALSE(c.simulates);
    EXPECT_EQ(c.verdict, "unchanged");
  }
}

TEST(Welfare, CommitmentGameMakesP1WorseOff) {
  Game g = gen_commitment();
  auto r = welfare_report(g, default_policy(g), {R(0)});
  bool worse = false;
  for (const auto& c : r.grid[0].components) {
    if (c.simulates && c.u1_range.second < r.base_u1.first) worse = true;
  }
  EXPECT_TRUE(worse);
}

TEST(Welfare, JointProjectCheapSimulationDestroysCooperation) {
  Game g = gen_joint_project_explicit(3);
  auto r = welfare_report(g, default_policy(g), {R(1, 2)});
  ASSERT_FALSE(r.grid[0].components.empty());
  for (const auto& c : r.grid[0].components) {
    EXPECT_TRUE(c.simulates);
    EXPECT_EQ(c.verdict, "pareto-worse");
  }
}

TEST(Welfare, VerdictTable) {
  using P = PlayerComparison;
  EXPECT_EQ(welfare_verdict(P::kBetter, P::kSame), "pareto-better");
  EXPECT_EQ(welfare_verdict(P::kWorse, P::kWorse), "pareto-worse");
  EXPECT_EQ(welfare_verdict(P::kBetter, P::kWorse), "p1-better");
  EXPECT_EQ(welfare_verdict(P::kWorse, P::kBetter), "p2-better");
  EXPECT_EQ(welfare_verdict(P::kSame, P::kSame), "unchanged");
  EXPECT_EQ(welfare_verdict(P::kMixed, P::kBetter), "incomparable");
  EXPECT_EQ(compare_range({R(1), R(2)}, {R(0), R(1)}), P::kMixed);
  EXPECT_EQ(compare_range({R(2), R(3)}, {R(0), R(1)}), P::kBetter);
}

}  // namespace
}  // namespace simgame
