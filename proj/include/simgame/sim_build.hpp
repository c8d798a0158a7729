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
#ifndef SIMGAME_SIM_BUILD_HPP_
#define SIMGAME_SIM_BUILD_HPP_

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simgame/errors.hpp"
#include "simgame/game.hpp"
#include "simgame/ne_enum.hpp"
#include "simgame/rational.hpp"

namespace simgame {

inline constexpr const char* kSimLabel = "SIM";

// For each P2 action b, a P1 strategy supported on br(b).
struct BestResponsePolicy {
  std::vector<MixedStrategy> response;

  friend bool operator==(const BestResponsePolicy& a, const BestResponsePolicy& b) {
    return a.response == b.response;
  }
};

inline void validate_policy(const Game& g, const BestResponsePolicy& policy) {
  if (policy.response.size() != g.n2()) {
    throw PreconditionError("policy must assign a response to every P2 action");
  }
  auto br1 = pure_best_responses_p1(g);
  for (std::size_t b = 0; b < g.n2(); ++b) {
    const auto& s = policy.response[b];
    if (s.player() != Player::kOne || s.size() != g.n1()) {
      throw PreconditionError("policy response for " + g.labels(Player::kTwo)[b] +
                              " is not a P1 strategy");
    }
    for (auto a : s.support()) {
      if (!contains(br1[b], a)) {
        throw PreconditionError("policy plays " + g.labels(Player::kOne)[a] +
                                " against " + g.labels(Player::kTwo)[b] +
                                ", which is not a best response");
      }
    }
  }
}

// Lowest-index pure best response to every P2 action.
inline BestResponsePolicy default_policy(const Game& g) {
  BestResponsePolicy p;
  for (const auto& br : pure_best_responses_p1(g)) {
    p.response.push_back(MixedStrategy::pure(Player::kOne, g.n1(), br.front()));
  }
  return p;
}

// All pure policies in lexicographic order of their choices.
inline std::vector<BestResponsePolicy> enumerate_pure_policies(const Game& g,
                                                               std::size_t cap) {
  auto br1 = pure_best_responses_p1(g);
  std::size_t count = 1;
  for (const auto& br : br1) {
    count *= br.size();
    if (count > cap) {
      throw CapExceeded("more than " + std::to_string(cap) +
                        " pure best-response policies");
    }
  }
  std::vector<BestResponsePolicy> out;
  std::vector<std::size_t> choice(g.n2(), 0);
  while (true) {
    BestResponsePolicy p;
    for (std::size_t b = 0; b < g.n2(); ++b) {
      p.response.push_back(MixedStrategy::pure(Player::kOne, g.n1(), br1[b][choice[b]]));
    }
    out.push_back(std::move(p));
    std::size_t b = g.n2();
    while (b > 0 && choice[b - 1] + 1 == br1[b - 1].size()) {
      choice[b - 1] = 0;
      --b;
    }
    if (b == 0) break;
    ++choice[b - 1];
  }
  return out;
}

// "SIM[a_1,...,a_n]" naming the pure response to each P2 action.
inline std::string policy_label(const Game& g, const BestResponsePolicy& p) {
  std::string s = std::string(kSimLabel) + "[";
  for (std::size_t b = 0; b < p.response.size(); ++b) {
    if (b) s += ",";
    auto supp = p.response[b].support();
    if (supp.size() == 1) {
      s += g.labels(Player::kOne)[supp.front()];
    } else {
      s += "(";
      for (std::size_t i = 0; i < supp.size(); ++i) {
        if (i) s += "|";
        s += g.labels(Player::kOne)[supp[i]] + ":" + to_string(p.response[b][supp[i]]);
      }
      s += ")";
    }
  }
  return s + "]";
}

struct SimulationGame {
  Game base;
  Rational cost;
  BestResponsePolicy policy;
  Game augmented;

  std::size_t sim_index() const { return base.n1(); }
};

inline SimulationGame build(const Game& g, const Rational& c,
                            const BestResponsePolicy& policy,
                            const std::string& sim_label = kSimLabel) {
  validate_policy(g, policy);
  const std::size_t n1 = g.n1();
  const std::size_t n2 = g.n2();
  Matrix<Rational> u1(n1 + 1, n2);
  Matrix<Rational> u2(n1 + 1, n2);
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      u1(a, b) = g.u1(a, b);
      u2(a, b) = g.u2(a, b);
    }
  }
  for (std::size_t b = 0; b < n2; ++b) {
    Rational best = g.u1(0, b);
    for (std::size_t a = 1; a < n1; ++a) best = std::max(best, g.u1(a, b));
    u1(n1, b) = best - c;
    Rational expected = 0;
    for (auto a : policy.response[b].support()) {
      expected += policy.response[b][a] * g.u2(a, b);
    }
    u2(n1, b) = expected;
  }
  auto labels1 = g.labels(Player::kOne);
  if (std::find(labels1.begin(), labels1.end(), sim_label) != labels1.end()) {
    throw GameError("base game already has an action labelled " + sim_label);
  }
  labels1.push_back(sim_label);
  return SimulationGame{g, c, policy,
                        Game(labels1, g.labels(Player::kTwo), std::move(u1), std::move(u2))};
}

// Cost adjustment vector for the augmented P1 actions: only SIM pays c.
inline RationalVector sim_adjustments(const Game& base) {
  RationalVector adj(base.n1() + 1, Rational(0));
  adj.back() = 1;
  return adj;
}

// Removes the SIM coordinate from an augmented P1 strategy that does not use it.
inline MixedStrategy strip_sim(const MixedStrategy& s) {
  if (s.weights().back() != 0) {
    throw PreconditionError("strategy simulates with positive probability");
  }
  return MixedStrategy(Player::kOne,
                       RationalVector(s.weights().begin(), s.weights().end() - 1));
}

// Appends a zero SIM coordinate to a base-game P1 strategy.
inline MixedStrategy embed_p1(const MixedStrategy& s) {
  RationalVector w = s.weights();
  w.push_back(0);
  return MixedStrategy(Player::kOne, std::move(w));
}

using EquilibriumSolver = std::function<std::vector<NEComponent>(const Game&)>;

struct PolicySolution {
  BestResponsePolicy policy;
  std::string label;
  // Components containing a profile that simulates with positive probability.
  std::vector<NEComponent> new_components;
};

struct AllPoliciesResult {
  std::vector<NEComponent> base_components;
  std::vector<PolicySolution> policies;
  // Pairs of policies whose new equilibria overlap although their SIM rows differ.
  std::vector<std::pair<std::size_t, std::size_t>> shared_new;
  // Pairs of policies that produce identical augmented games.
  std::vector<std::pair<std::size_t, std::size_t>> duplicates;
};

inline bool simulates(const NEComponent& c) {
  for (const auto& x : c.p1_vertices) {
    if (x.weights().back() > 0) return true;
  }
  return false;
}

inline AllPoliciesResult solve_all_policies(const Game& g, const Rational& c,
                                            const EquilibriumSolver& solver,
                                            std::size_t policy_cap = 64) {
  AllPoliciesResult r;
  r.base_components = solver(g);
  auto policies = enumerate_pure_policies(g, policy_cap);
  std::vector<Game> games;
  std::vector<std::set<Profile>> new_profiles;
  for (auto& p : policies) {
    PolicySolution ps;
    ps.label = policy_label(g, p);
    auto sim = build(g, c, p, ps.label);
    std::set<Profile> profiles;
    for (auto& comp : solver(sim.augmented)) {
      if (!simulates(comp)) continue;
      for (const auto& pr : vertex_profiles(comp)) {
        if (pr.p1.weights().back() > 0) profiles.insert(pr);
      }
      ps.new_components.push_back(std::move(comp));
    }
    ps.policy = std::move(p);
    games.push_back(sim.augmented);
    new_profiles.push_back(std::move(profiles));
    r.policies.push_back(std::move(ps));
  }
  for (std::size_t i = 0; i < games.size(); ++i) {
    for (std::size_t j = i + 1; j < games.size(); ++j) {
      if (games[i].payoffs(Player::kOne) == games[j].payoffs(Player::kOne) &&
          games[i].payoffs(Player::kTwo) == games[j].payoffs(Player::kTwo)) {
        r.duplicates.emplace_back(i, j);
        continue;
      }
      for (const auto& pr : new_profiles[i]) {
        if (new_profiles[j].count(pr)) {
          r.shared_new.emplace_back(i, j);
          break;
        }
      }
    }
  }
  return r;
}

}  // namespace simgame

#endif  // SIMGAME_SIM_BUILD_HPP_
