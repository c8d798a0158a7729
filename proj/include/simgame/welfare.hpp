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
#ifndef SIMGAME_WELFARE_HPP_
#define SIMGAME_WELFARE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simgame/analysis.hpp"
#include "simgame/errors.hpp"
#include "simgame/game.hpp"
#include "simgame/ne_enum.hpp"
#include "simgame/rational.hpp"
#include "simgame/sim_build.hpp"

namespace simgame {

using Range = std::pair<Rational, Rational>;

inline void extend(std::optional<Range>& r, const Rational& x) {
  if (!r) {
    r = Range{x, x};
  } else {
    r->first = std::min(r->first, x);
    r->second = std::max(r->second, x);
  }
}

// Utility ranges over the vertex profiles of the given components.
inline std::pair<Range, Range> utility_ranges(const Game& g,
                                              const std::vector<NEComponent>& comps) {
  std::optional<Range> r1, r2;
  for (const auto& comp : comps) {
    for (const auto& pr : vertex_profiles(comp)) {
      auto [x, y] = expected_utility(g, pr);
      extend(r1, x);
      extend(r2, y);
    }
  }
  if (!r1) throw VerificationError("no equilibrium found");
  return {*r1, *r2};
}

struct ClassificationReport {
  bool is_zero_sum = false;
  bool is_generic = false;
  bool has_br_tiebreaking = false;
  bool is_generalized_trust_game = false;
  Rational upper_threshold;
  std::vector<std::string> genericity_violations;
  // Outcomes of the pure commitment equilibria with P2 leading.
  std::vector<std::pair<std::size_t, std::size_t>> commitment_outcomes;
};

// Pure commitment outcomes (a, b) with P2 leading and P1 answering with a
// best response that leaves P2 its optimal commitment value.
inline std::vector<std::pair<std::size_t, std::size_t>> p2_commitment_outcomes(
    const Game& g) {
  auto br1 = pure_best_responses_p1(g);
  std::optional<Rational> v2;
  for (std::size_t b = 0; b < g.n2(); ++b) {
    for (auto a : br1[b]) {
      if (!v2 || g.u2(a, b) > *v2) v2 = g.u2(a, b);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < g.n2(); ++b) {
    for (auto a : br1[b]) {
      if (g.u2(a, b) == *v2) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline ClassificationReport classify(const Game& g, std::size_t cap = action_cap()) {
  ClassificationReport r;
  r.is_zero_sum = is_zero_sum(g);
  auto gen = is_generic(g);
  r.is_generic = gen.generic;
  r.genericity_violations = gen.violations;
  r.has_br_tiebreaking = has_br_tiebreaking(g);
  r.upper_threshold = upper_threshold(g);
  r.commitment_outcomes = p2_commitment_outcomes(g);
  auto comps = all_nash_equilibria(g, cap);
  bool gtg = true;
  for (const auto& comp : comps) {
    for (const auto& pr : vertex_profiles(comp)) {
      auto [x, y] = expected_utility(g, pr);
      for (auto [a, b] : r.commitment_outcomes) {
        if (!(g.u1(a, b) > x && g.u2(a, b) > y)) gtg = false;
      }
    }
  }
  r.is_generalized_trust_game = gtg;
  return r;
}

struct ConstructionCandidate {
  Profile rho;  // equilibrium of the auxiliary game, over the full action sets
  Rational p;
  Rational alpha;
  Rational eta;
  Profile profile;  // assembled profile of the simulation game
  bool verified = false;
  std::string failure;
};

struct TrustConstruction {
  char construction_case = 'A';
  ActionSet optimal_commitments;
  ActionSet unique_responses;
  Rational v2;
  std::optional<Game> auxiliary;
  std::vector<ConstructionCandidate> candidates;
  Profile equilibrium;
};

// Builds an equilibrium of G_sim^c that improves on every base equilibrium,
// then verifies it exactly. Throws VerificationError when c is too large.
inline TrustConstruction construct_trust_sim_ne(const Game& g, const Rational& c,
                                                std::size_t cap = action_cap()) {
  if (c <= 0) throw PreconditionError("cost must be positive");
  if (has_br_tiebreaking(g)) {
    throw PreconditionError("game has best-response utility tiebreaking");
  }
  if (!classify(g, cap).is_generalized_trust_game) {
    throw PreconditionError("game is not a generalized trust game");
  }
  const std::size_t n1 = g.n1();
  const std::size_t n2 = g.n2();
  auto policy = default_policy(g);
  auto br1 = pure_best_responses_p1(g);
  Game aug = build(g, c, policy).augmented;
  auto br = [&](std::size_t b) { return br1[b].front(); };
  std::vector<Rational> m(n2);
  for (std::size_t b = 0; b < n2; ++b) m[b] = g.u1(br(b), b);

  TrustConstruction t;
  t.v2 = g.u2(br(0), 0);
  for (std::size_t b = 1; b < n2; ++b) t.v2 = std::max(t.v2, g.u2(br(b), b));
  for (std::size_t b = 0; b < n2; ++b) {
    if (g.u2(br(b), b) == t.v2) t.optimal_commitments.push_back(b);
  }
  for (std::size_t a = 0; a < n1; ++a) {
    bool all = true;
    for (auto b : t.optimal_commitments) all = all && contains(br1[b], a);
    if (all) t.unique_responses.push_back(a);
  }
  auto unif_oc = MixedStrategy::uniform(Player::kTwo, n2, t.optimal_commitments);

  if (t.unique_responses.empty()) {
    t.construction_case = 'A';
    ConstructionCandidate cand;
    cand.profile = {MixedStrategy::pure(Player::kOne, n1 + 1, n1), unif_oc};
    cand.p = 1;
    cand.alpha = 0;
    auto dev = find_profitable_deviation(aug, cand.profile);
    cand.verified = !dev;
    if (dev) cand.failure = *dev;
    t.candidates.push_back(cand);
  } else {
    t.construction_case = 'B';
    ActionSet dev_actions;
    for (std::size_t b = 0; b < n2; ++b) {
      if (!contains(t.optimal_commitments, b)) dev_actions.push_back(b);
    }
    if (dev_actions.empty()) {
      throw PreconditionError("every P2 action is an optimal commitment");
    }
    const auto& A = t.unique_responses;
    const auto& D = dev_actions;
    Matrix<Rational> w1(A.size(), D.size()), w2(A.size(), D.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
      for (std::size_t j = 0; j < D.size(); ++j) {
        std::size_t a = A[i], d = D[j];
        w1(i, j) = -(m[d] - g.u1(a, d));
        w2(i, j) = (g.u2(a, d) - t.v2) / (t.v2 - g.u2(br(d), d));
      }
    }
    std::vector<std::string> l1, l2;
    for (auto a : A) l1.push_back(g.labels(Player::kOne)[a]);
    for (auto d : D) l2.push_back(g.labels(Player::kTwo)[d]);
    t.auxiliary = Game(l1, l2, w1, w2);
    for (const auto& comp : all_nash_equilibria(*t.auxiliary, cap)) {
      for (const auto& pr : vertex_profiles(comp)) {
        RationalVector r1(n1, Rational(0)), r2(n2, Rational(0));
        for (std::size_t i = 0; i < A.size(); ++i) r1[A[i]] = pr.p1[i];
        for (std::size_t j = 0; j < D.size(); ++j) r2[D[j]] = pr.p2[j];
        ConstructionCandidate cand;
        cand.rho = {MixedStrategy(Player::kOne, r1), MixedStrategy(Player::kTwo, r2)};
        Rational X = expected_utility(g, cand.rho).second;
        Rational Y = 0, MD = 0;
        for (auto d : D) {
          Y += r2[d] * g.u2(br(d), d);
          MD += r2[d] * m[d];
        }
        Rational U1 = expected_utility(g, cand.rho).first;
        bool first = true;
        for (auto d : D) {
          if (r2[d] == 0) continue;
          Rational u1d = 0;
          for (auto a : A) u1d += r1[a] * g.u1(a, d);
          Rational gap = m[d] - u1d;
          if (first || gap < cand.eta) cand.eta = gap;
          first = false;
        }
        if (X == Y || MD == U1) {
          cand.failure = "degenerate indifference equations";
          t.candidates.push_back(cand);
          continue;
        }
        cand.p = (X - t.v2) / (X - Y);
        cand.alpha = 1 / (MD - U1);
        Rational q = cand.alpha * c;
        if (cand.p < 0 || cand.p > 1 || q < 0 || q > 1) {
          cand.failure = "probabilities outside [0, 1]: p=" + to_string(cand.p) +
                         " q=" + to_string(q);
          t.candidates.push_back(cand);
          continue;
        }
        RationalVector x(n1 + 1, Rational(0)), y(n2, Rational(0));
        for (std::size_t a = 0; a < n1; ++a) x[a] = (1 - cand.p) * r1[a];
        x[n1] = cand.p;
        for (std::size_t b = 0; b < n2; ++b) y[b] = (1 - q) * unif_oc[b] + q * r2[b];
        cand.profile = {MixedStrategy(Player::kOne, x), MixedStrategy(Player::kTwo, y)};
        auto dev = find_profitable_deviation(aug, cand.profile);
        cand.verified = !dev;
        if (dev) cand.failure = *dev;
        t.candidates.push_back(cand);
      }
    }
  }
  for (const auto& cand : t.candidates) {
    if (cand.verified) {
      t.equilibrium = cand.profile;
      return t;
    }
  }
  std::string why = t.candidates.empty() ? "no candidate" : t.candidates.front().failure;
  throw VerificationError("construction does not verify at c=" + to_string(c) + ": " +
                          why);
}

struct ZeroSumMargin {
  NEComponent component;
  Rational min_u1_margin;  // min over vertices of u_1 - v
  Rational min_u2_margin;  // min over vertices of -v - u_2
};

struct ZeroSumVerdict {
  Rational value;
  Rational cost;
  bool holds = true;
  std::vector<ZeroSumMargin> components;
};

inline ZeroSumVerdict zero_sum_bounds(const Game& g, const Rational& c,
                                      std::size_t cap = action_cap()) {
  if (!is_zero_sum(g)) throw PreconditionError("game is not zero-sum");
  ZeroSumVerdict v;
  v.value = maxmin(g, Player::kOne).value;
  v.cost = c;
  Game aug = build(g, c, default_policy(g)).augmented;
  for (auto& comp : all_nash_equilibria(aug, cap)) {
    ZeroSumMargin zm;
    bool first = true;
    for (const auto& pr : vertex_profiles(comp)) {
      auto [x, y] = expected_utility(aug, pr);
      Rational m1 = x - v.value, m2 = -v.value - y;
      if (first || m1 < zm.min_u1_margin) zm.min_u1_margin = m1;
      if (first || m2 < zm.min_u2_margin) zm.min_u2_margin = m2;
      first = false;
    }
    if (zm.min_u1_margin < 0 || zm.min_u2_margin < 0) v.holds = false;
    zm.component = std::move(comp);
    v.components.push_back(std::move(zm));
  }
  return v;
}

enum class PlayerComparison { kBetter, kWorse, kSame, kMixed };

// Compares a component's utility range against the base range.
inline PlayerComparison compare_range(const Range& comp, const Range& base) {
  if (comp.first > base.second) return PlayerComparison::kBetter;
  if (comp.second < base.first) return PlayerComparison::kWorse;
  if (comp == base) return PlayerComparison::kSame;
  return PlayerComparison::kMixed;
}

inline std::string welfare_verdict(PlayerComparison p1, PlayerComparison p2) {
  using P = PlayerComparison;
  auto ok = [](P x, P want) { return x == want || x == P::kSame; };
  if (p1 == P::kSame && p2 == P::kSame) return "unchanged";
  if (ok(p1, P::kBetter) && ok(p2, P::kBetter)) return "pareto-better";
  if (ok(p1, P::kWorse) && ok(p2, P::kWorse)) return "pareto-worse";
  if (p1 == P::kBetter && p2 == P::kWorse) return "p1-better";
  if (p1 == P::kWorse && p2 == P::kBetter) return "p2-better";
  return "incomparable";
}

struct ComponentWelfare {
  NEComponent component;
  bool simulates = false;
  Range u1_range;
  Range u2_range;
  std::string verdict;
};

struct GridPoint {
  Rational c;
  std::vector<ComponentWelfare> components;
};

struct WelfareReport {
  Range base_u1;
  Range base_u2;
  std::vector<GridPoint> grid;
};

inline WelfareReport welfare_report(const Game& g, const BestResponsePolicy& policy,
                                    const std::vector<Rational>& c_values,
                                    std::size_t cap = action_cap()) {
  WelfareReport r;
  std::tie(r.base_u1, r.base_u2) = utility_ranges(g, all_nash_equilibria(g, cap));
  for (const auto& c : c_values) {
    GridPoint gp;
    gp.c = c;
    Game aug = build(g, c, policy).augmented;
    for (auto& comp : all_nash_equilibria(aug, cap)) {
      for (const auto& pr : vertex_profiles(comp)) {
        if (auto dev = find_profitable_deviation(aug, pr)) {
          throw VerificationError("component vertex fails at c=" + to_string(c) + ": " +
                                  *dev);
        }
      }
      ComponentWelfare cw;
      std::tie(cw.u1_range, cw.u2_range) = utility_ranges(aug, {comp});
      cw.simulates = simulates(comp);
      cw.verdict = welfare_verdict(compare_range(cw.u1_range, r.base_u1),
                                   compare_range(cw.u2_range, r.base_u2));
      cw.component = std::move(comp);
      gp.components.push_back(std::move(cw));
    }
    r.grid.push_back(std::move(gp));
  }
  return r;
}

}  // namespace simgame

#endif  // SIMGAME_WELFARE_HPP_
