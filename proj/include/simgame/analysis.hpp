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
#ifndef SIMGAME_ANALYSIS_HPP_
#define SIMGAME_ANALYSIS_HPP_

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simgame/deviation.hpp"
#include "simgame/game.hpp"
#include "simgame/ne_enum.hpp"
#include "simgame/rational.hpp"

namespace simgame {

struct MaxminResult {
  Rational value;
  MixedStrategy strategy;
};

// Exact maxmin value of `player` with a witnessing strategy, taken as the
// first optimal vertex in value order.
inline MaxminResult maxmin(const Game& g, Player player) {
  // Give the opponent the negated payoffs; the polytope constraint
  // -u_p(z, o) <= gamma then reads u_p(z, o) >= -gamma.
  Matrix<Rational> neg(g.n1(), g.n2());
  for (std::size_t a = 0; a < g.n1(); ++a) {
    for (std::size_t b = 0; b < g.n2(); ++b) neg(a, b) = -g.u(player, a, b);
  }
  Game aux = player == Player::kOne
                 ? Game(g.labels(Player::kOne), g.labels(Player::kTwo), g.payoffs(Player::kOne), neg)
                 : Game(g.labels(Player::kOne), g.labels(Player::kTwo), neg, g.payoffs(Player::kTwo));
  ResponsePolytope poly(aux, player);
  std::optional<MaxminResult> best;
  for (const auto& v : poly.at(0)) {
    MixedStrategy s(player, v.base);
    Rational worst;
    bool first = true;
    for (std::size_t o = 0; o < g.num_actions(opponent(player)); ++o) {
      Rational val = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) continue;
        val += s[i] * (player == Player::kOne ? g.u(player, i, o) : g.u(player, o, i));
      }
      if (first || val < worst) worst = val;
      first = false;
    }
    if (!best || worst > best->value) best = MaxminResult{worst, s};
  }
  return *best;
}

struct CommitmentOutcome {
  std::size_t leader_action;
  ActionSet follower_responses;
  // Utility ranges (min, max) over the follower's best responses.
  std::pair<Rational, Rational> u1_range;
  std::pair<Rational, Rational> u2_range;
};

// Pure leader actions that maximize the leader's value when the follower best
// responds, ranking by the most favourable follower best response. The full
// follower best-response set is reported so callers can apply other tie rules.
inline std::vector<CommitmentOutcome> pure_commitment_equilibria(const Game& g,
                                                                 Player leader) {
  Player follower = opponent(leader);
  std::vector<CommitmentOutcome> all;
  for (std::size_t l = 0; l < g.num_actions(leader); ++l) {
    MixedStrategy pure = MixedStrategy::pure(leader, g.num_actions(leader), l);
    CommitmentOutcome o;
    o.leader_action = l;
    o.follower_responses = best_response_set(g, follower, pure);
    bool first = true;
    for (auto f : o.follower_responses) {
      std::size_t a = leader == Player::kOne ? l : f;
      std::size_t b = leader == Player::kOne ? f : l;
      if (first) {
        o.u1_range = {g.u1(a, b), g.u1(a, b)};
        o.u2_range = {g.u2(a, b), g.u2(a, b)};
        first = false;
      } else {
        o.u1_range = {std::min(o.u1_range.first, g.u1(a, b)),
                      std::max(o.u1_range.second, g.u1(a, b))};
        o.u2_range = {std::min(o.u2_range.first, g.u2(a, b)),
                      std::max(o.u2_range.second, g.u2(a, b))};
      }
    }
    all.push_back(std::move(o));
  }
  auto leader_best = [&](const CommitmentOutcome& o) {
    return leader == Player::kOne ? o.u1_range.second : o.u2_range.second;
  };
  Rational best = leader_best(all.front());
  for (const auto& o : all) best = std::max(best, leader_best(o));
  std::vector<CommitmentOutcome> out;
  for (auto& o : all) {
    if (leader_best(o) == best) out.push_back(std::move(o));
  }
  return out;
}

// max u_1 - maxmin_1: simulation is strictly dominated above this cost.
inline Rational upper_threshold(const Game& g) {
  return max_payoff(g, Player::kOne) - maxmin(g, Player::kOne).value;
}

struct GenericityReport {
  bool generic = true;
  std::vector<std::string> violations;
};

// Checks (0) pairwise distinct payoffs per player, (1)/(1') unique pure best
// responses, (3) distinct threshold probabilities per baseline pair. Later
// checks run only when the earlier ones pass.
inline GenericityReport is_generic(const Game& g) {
  GenericityReport r;
  std::set<Rational> dup;
  for (Player p : {Player::kOne, Player::kTwo}) {
    std::set<Rational> seen;
    for (std::size_t a = 0; a < g.n1(); ++a) {
      for (std::size_t b = 0; b < g.n2(); ++b) {
        if (!seen.insert(g.u(p, a, b)).second) dup.insert(g.u(p, a, b));
      }
    }
  }
  for (const auto& x : dup) r.violations.push_back("duplicate payoff " + to_display(x));
  if (r.violations.empty()) {
    auto br1 = pure_best_responses_p1(g);
    auto br2 = pure_best_responses_p2(g);
    for (std::size_t b = 0; b < g.n2(); ++b) {
      if (br1[b].size() > 1) {
        r.violations.push_back("P1 has multiple best responses to " +
                               g.labels(Player::kTwo)[b]);
      }
    }
    for (std::size_t a = 0; a < g.n1(); ++a) {
      if (br2[a].size() > 1) {
        r.violations.push_back("P2 has multiple best responses to " +
                               g.labels(Player::kOne)[a]);
      }
    }
    if (r.violations.empty()) {
      for (std::size_t b = 0; b < g.n2(); ++b) {
        std::size_t a = br1[b].front();
        const Rational& ub = g.u2(a, b);
        std::map<Rational, std::size_t> thresholds;
        for (std::size_t d = 0; d < g.n2(); ++d) {
          if (d == b) continue;
          const Rational& x = g.u2(a, d);
          const Rational& y = g.u2(br1[d].front(), d);
          auto cls = classify_deviation(x, ub, y);
          if (cls != DeviationClass::kGreater && cls != DeviationClass::kLess) continue;
          Rational p = deviation_threshold(cls, deviation_ratio(cls, x, ub, y));
          auto [it, fresh] = thresholds.emplace(p, d);
          if (!fresh) {
            r.violations.push_back(
                "equal threshold probability " + to_display(p) + " for baseline (" +
                g.labels(Player::kOne)[a] + "," + g.labels(Player::kTwo)[b] +
                ") at " + g.labels(Player::kTwo)[it->second] + " and " +
                g.labels(Player::kTwo)[d]);
          }
        }
      }
    }
  }
  r.generic = r.violations.empty();
  return r;
}

}  // namespace simgame

#endif  // SIMGAME_ANALYSIS_HPP_
