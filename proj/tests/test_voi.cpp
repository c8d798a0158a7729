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

using testing::R;

TEST(Voi, TrustGameAgainstMixedP2) {
  Game g = gen_trust();
  // Clairvoyant 25 q_C; best fixed reply max(0, 25 - 175 q_D).
  auto r = voi_of(g, MixedStrategy(Player::kTwo, {R(29, 30), R(1, 30)}));
  EXPECT_EQ(r.clairvoyant_value, R(145, 6));
  EXPECT_EQ(r.best_response_value, R(115, 6));
  EXPECT_EQ(r.voi, R(5));
}

TEST(Voi, PureStrategyHasZeroValue) {
  Game g = gen_guess_number(3);
  for (std::size_t b = 0; b < 3; ++b) {
    EXPECT_EQ(voi_of(g, MixedStrategy::pure(Player::kTwo, 3, b)).voi, R(0));
  }
}

TEST(Voi, GuessNumberUniform) {
  // Clairvoyant 1, best fixed reply 2/N - 1.
  for (long n = 2; n <= 5; ++n) {
    Game g = gen_guess_number(static_cast<std::size_t>(n));
    auto r = voi_of(g, MixedStrategy::uniform(Player::kTwo, n));
    EXPECT_EQ(r.voi, 2 - Rational(2, n));
  }
}

TEST(Voi, NonNegativeOnRandomStrategies) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 50; ++rep) {
    Game g = testing::random_game(rng, 3, 3, -9, 9, false);
    RationalVector w{Rational(1 + rng() % 5), Rational(1 + rng() % 5), Rational(rng() % 5)};
    Rational t = sum(w);
    for (auto& x : w) x /= t;
    auto r = voi_of(g, MixedStrategy(Player::kTwo, w));
    EXPECT_GE(r.voi, 0);
    EXPECT_LE(r.voi, upper_threshold(g));
  }
}

TEST(Voi, RejectsWrongPlayerOrSize) {
  Game g = gen_trust();
  EXPECT_THROW(voi_of(g, MixedStrategy::uniform(Player::kOne, 2)), PreconditionError);
  EXPECT_THROW(voi_of(g, MixedStrategy::uniform(Player::kTwo, 3)), PreconditionError);
}

TEST(Persistence, ThresholdIsVoiAndExact) {
  Game g = gen_trust();
  auto comps = all_nash_equilibria(g);
  for (const auto& p : testing::profile_set(comps)) {
    Rational v = persistence_threshold(g, p);
    EXPECT_EQ(v, voi_of(g, p.p2).voi);
    Profile e{embed_p1(p.p1), p.p2};
    EXPECT_TRUE(is_nash(build(g, v, default_policy(g)).augmented, e));
    if (v > 0) {
      EXPECT_FALSE(is_nash(build(g, v - R(1, 1000), default_policy(g)).augmented, e));
    }
  }
  EXPECT_THROW(persistence_threshold(g, pure_profile(g, 0, 0)), VerificationError);
}

}  // namespace
}  // namespace simgame
