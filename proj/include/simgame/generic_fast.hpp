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
#ifndef SIMGAME_GENERIC_FAST_HPP_
#define SIMGAME_GENERIC_FAST_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simgame/analysis.hpp"
#include "simgame/deviation.hpp"
#include "simgame/errors.hpp"
#include "simgame/game.hpp"
#include "simgame/ne_enum.hpp"
#include "simgame/rational.hpp"
#include "simgame/sim_build.hpp"

namespace simgame {

// Counts elementary steps of the triplet search.
struct OpCounter {
  std::size_t ops = 0;
  void tick(std::size_t n = 1) { ops += n; }
};

struct TripletCandidate {
  std::size_t baseline_a;
  std::size_t baseline_b;
  std::size_t deviation_d;
  DeviationClass cls;
  Rational ratio;        // r_d for greater, r_d^{-1} for less
  Rational p_threshold;  // simulation probability
  Rational alpha;        // P2's deviation mass is alpha * c

  friend bool operator==(const TripletCandidate& x, const TripletCandidate& y) {
    return x.baseline_a == y.baseline_a && x.baseline_b == y.baseline_b &&
           x.deviation_d == y.deviation_d && x.cls == y.cls && x.ratio == y.ratio &&
           x.p_threshold == y.p_threshold && x.alpha == y.alpha;
  }
};

struct RatioResult {
  DeviationClass cls;
  Rational ratio;  // 0 unless cls is greater or less
};

// Classifies d against the baseline (a, b); a must be a best response to b.
inline RatioResult attractiveness_ratio(const Game& g, std::size_t a, std::size_t b,
                                        std::size_t d) {
  auto br1 = pure_best_responses_p1(g);
  if (!contains(br1[b], a)) throw PreconditionError("baseline action is not a best response");
  if (d == b) throw PreconditionError("deviation equals the baseline action");
  const Rational& x = g.u2(a, d);
  const Rational& ub = g.u2(a, b);
  const Rational& y = g.u2(br1[d].front(), d);
  auto cls = classify_deviation(x, ub, y);
  if (cls == DeviationClass::kEqual) {
    throw NotGeneric("deviation " + g.labels(Player::kTwo)[d] +
                     " ties with the baseline payoff");
  }
  if (cls == DeviationClass::kGreater || cls == DeviationClass::kLess) {
    return {cls, deviation_ratio(cls, x, ub, y)};
  }
  return {cls, Rational(0)};
}

inline Rational threshold_probability(const Game& g, std::size_t a, std::size_t b,
                                      std::size_t d, DeviationClass cls) {
  auto r = attractiveness_ratio(g, a, b, d);
  if (r.cls != cls) throw PreconditionError("deviation class does not match");
  return deviation_threshold(cls, r.ratio);
}

inline void require_generic(const Game& g) {
  auto gen = is_generic(g);
  if (!gen.generic) {
    std::string msg = "game is not generic";
    for (const auto& v : gen.violations) msg += "; " + v;
    throw NotGeneric(msg);
  }
}

// Suitable triplets (a, b, d) in order of a, greater class before less class.
inline std::vector<TripletCandidate> suitable_triplets(const Game& g,
                                                       OpCounter* counter = nullptr) {
  require_generic(g);
  OpCounter local;
  OpCounter& ops = counter ? *counter : local;
  const std::size_t n1 = g.n1();
  const std::size_t n2 = g.n2();
  // Unique best responses, one pass per player.
  std::vector<std::size_t> br1(n2);
  std::vector<Rational> max1(n2);
  for (std::size_t b = 0; b < n2; ++b) {
    br1[b] = 0;
    for (std::size_t a = 1; a < n1; ++a) {
      ops.tick();
      if (g.u1(a, b) > g.u1(br1[b], b)) br1[b] = a;
    }
    max1[b] = g.u1(br1[b], b);
  }
  // Baseline pairs: for each a, the best column for P2 among those answered by a.
  std::vector<std::optional<std::size_t>> commit(n1);
  for (std::size_t b = 0; b < n2; ++b) {
    ops.tick();
    auto& c = commit[br1[b]];
    if (!c || g.u2(br1[b], b) > g.u2(br1[b], *c)) c = b;
  }
  std::vector<TripletCandidate> out;
  for (std::size_t a = 0; a < n1; ++a) {
    if (!commit[a]) continue;
    const std::size_t b = *commit[a];
    const Rational& ub = g.u2(a, b);
    std::optional<TripletCandidate> best[2];
    for (std::size_t d = 0; d < n2; ++d) {
      ops.tick();
      if (d == b) continue;
      const Rational& x = g.u2(a, d);
      const Rational& y = g.u2(br1[d], d);
      auto cls = classify_deviation(x, ub, y);
      if (cls != DeviationClass::kGreater && cls != DeviationClass::kLess) continue;
      Rational r = deviation_ratio(cls, x, ub, y);
      auto& slot = best[cls == DeviationClass::kGreater ? 0 : 1];
      if (!slot || r > slot->ratio) {
        slot = TripletCandidate{a, b, d, cls, r, deviation_threshold(cls, r),
                                1 / (max1[d] - g.u1(a, d))};
      }
    }
    for (auto& s : best) {
      if (s) out.push_back(*s);
    }
  }
  return out;
}

struct FastResult {
  std::vector<NEComponent> equilibria;  // single-vertex components
  std::vector<std::string> diagnostics;
};

inline NEComponent point_component(const Profile& p) {
  return NEComponent{{p.p1.support(), p.p2.support()}, {p.p1}, {p.p2}};
}

// Equilibria of the simulation game at a cheap cost c for a generic game:
// surviving pure equilibria plus one candidate per suitable triplet, each
// checked against every unilateral deviation.
inline FastResult fast_cheap_ne(const Game& g, const Rational& c,
                                OpCounter* counter = nullptr) {
  if (c <= 0) throw PreconditionError("cost must be positive");
  auto triplets = suitable_triplets(g, counter);
  Game aug = build(g, c, default_policy(g)).augmented;
  const std::size_t n1 = g.n1();
  const std::size_t n2 = g.n2();
  FastResult r;
  for (const auto& pr : pure_nash_equilibria(g)) {
    Profile e{embed_p1(pr.p1), pr.p2};
    if (auto dev = find_profitable_deviation(aug, e)) {
      r.diagnostics.push_back("pure equilibrium does not survive: " + *dev);
    } else {
      r.equilibria.push_back(point_component(e));
    }
  }
  for (const auto& t : triplets) {
    std::string name = "(" + g.labels(Player::kOne)[t.baseline_a] + "," +
                       g.labels(Player::kTwo)[t.baseline_b] + "," +
                       g.labels(Player::kTwo)[t.deviation_d] + ")";
    Rational q = t.alpha * c;
    if (q >= 1) {
      r.diagnostics.push_back("triplet " + name + " needs deviation mass " +
                              to_string(q) + " >= 1; c is not cheap");
      continue;
    }
    RationalVector w1(n1 + 1, Rational(0));
    w1[t.baseline_a] = 1 - t.p_threshold;
    w1[n1] = t.p_threshold;
    RationalVector w2(n2, Rational(0));
    w2[t.baseline_b] = 1 - q;
    w2[t.deviation_d] = q;
    Profile e{MixedStrategy(Player::kOne, w1), MixedStrategy(Player::kTwo, w2)};
    if (auto dev = find_profitable_deviation(aug, e)) {
      r.diagnostics.push_back("triplet " + name + " rejected: " + *dev);
    } else {
      r.equilibria.push_back(point_component(e));
    }
  }
  std::sort(r.equilibria.begin(), r.equilibria.end(),
            [](const NEComponent& x, const NEComponent& y) {
              if (x.support == y.support) return x.p1_vertices < y.p1_vertices;
              return x.support < y.support;
            });
  return r;
}

}  // namespace simgame

#endif  // SIMGAME_GENERIC_FAST_HPP_
