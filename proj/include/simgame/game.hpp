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
#ifndef SIMGAME_GAME_HPP_
#define SIMGAME_GAME_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simgame/errors.hpp"
#include "simgame/matrix.hpp"
#include "simgame/rational.hpp"

namespace simgame {

enum class Player { kOne = 1, kTwo = 2 };

inline Player opponent(Player p) {
  return p == Player::kOne ? Player::kTwo : Player::kOne;
}

inline int index_of(Player p) { return p == Player::kOne ? 0 : 1; }

using ActionSet = std::vector<std::size_t>;

// Two-player normal-form game. Payoff matrices are indexed (P1 action, P2 action).
class Game {
 public:
  Game() = default;
  Game(std::vector<std::string> p1_labels, std::vector<std::string> p2_labels,
       Matrix<Rational> u1, Matrix<Rational> u2)
      : labels_{std::move(p1_labels), std::move(p2_labels)},
        payoffs_{std::move(u1), std::move(u2)} {
    validate();
  }

  std::size_t num_actions(Player p) const { return labels_[index_of(p)].size(); }
  std::size_t n1() const { return labels_[0].size(); }
  std::size_t n2() const { return labels_[1].size(); }

  const std::vector<std::string>& labels(Player p) const {
    return labels_[index_of(p)];
  }
  const Matrix<Rational>& payoffs(Player p) const {
    return payoffs_[index_of(p)];
  }
  const Rational& u(Player p, std::size_t a, std::size_t b) const {
    return payoffs_[index_of(p)](a, b);
  }
  const Rational& u1(std::size_t a, std::size_t b) const { return payoffs_[0](a, b); }
  const Rational& u2(std::size_t a, std::size_t b) const { return payoffs_[1](a, b); }

  std::optional<std::size_t> find_action(Player p, const std::string& label) const {
    const auto& l = labels(p);
    auto it = std::find(l.begin(), l.end(), label);
    if (it == l.end()) return std::nullopt;
    return static_cast<std::size_t>(it - l.begin());
  }

  friend bool operator==(const Game& a, const Game& b) {
    return a.labels_[0] == b.labels_[0] && a.labels_[1] == b.labels_[1] &&
           a.payoffs_[0] == b.payoffs_[0] && a.payoffs_[1] == b.payoffs_[1];
  }

 private:
  void validate() const {
    for (int i = 0; i < 2; ++i) {
      if (labels_[i].empty()) {
        throw GameError("player " + std::to_string(i + 1) + " has no actions");
      }
      std::set<std::string> seen(labels_[i].begin(), labels_[i].end());
      if (seen.size() != labels_[i].size()) {
        throw GameError("duplicate action label for player " +
                        std::to_string(i + 1));
      }
      if (payoffs_[i].rows() != labels_[0].size() ||
          payoffs_[i].cols() != labels_[1].size()) {
        throw GameError("payoff matrix u" + std::to_string(i + 1) +
                        " does not match the action counts");
      }
    }
  }

  std::vector<std::string> labels_[2];
  Matrix<Rational> payoffs_[2];
};

class MixedStrategy {
 public:
  MixedStrategy() = default;
  MixedStrategy(Player player, RationalVector weights)
      : player_(player), weights_(std::move(weights)) {
    if (weights_.empty()) throw GameError("empty strategy");
    Rational total = 0;
    for (const auto& w : weights_) {
      if (w < 0) throw GameError("negative strategy weight " + to_string(w));
      total += w;
    }
    if (total != 1) {
      throw GameError("strategy weights sum to " + to_string(total));
    }
  }

  static MixedStrategy pure(Player player, std::size_t n, std::size_t action) {
    RationalVector w(n, Rational(0));
    w.at(action) = 1;
    return MixedStrategy(player, std::move(w));
  }
  static MixedStrategy uniform(Player player, std::size_t n, const ActionSet& over) {
    RationalVector w(n, Rational(0));
    for (auto a : over) w.at(a) = Rational(1, static_cast<long>(over.size()));
    return MixedStrategy(player, std::move(w));
  }
  static MixedStrategy uniform(Player player, std::size_t n) {
    ActionSet all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return uniform(player, n, all);
  }

  Player player() const { return player_; }
  std::size_t size() const { return weights_.size(); }
  const RationalVector& weights() const { return weights_; }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }

  ActionSet support() const {
    ActionSet s;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (weights_[i] > 0) s.push_back(i);
    }
    return s;
  }
  bool is_pure() const { return support().size() == 1; }

  friend bool operator==(const MixedStrategy& a, const MixedStrategy& b) {
    return a.player_ == b.player_ && a.weights_ == b.weights_;
  }
  friend bool operator<(const MixedStrategy& a, const MixedStrategy& b) {
    return a.weights_ < b.weights_;
  }

 private:
  Player player_ = Player::kOne;
  RationalVector weights_;
};

struct Profile {
  MixedStrategy p1;
  MixedStrategy p2;

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.p1 == b.p1 && a.p2 == b.p2;
  }
  friend bool operator<(const Profile& a, const Profile& b) {
    if (a.p1.weights() != b.p1.weights()) return a.p1.weights() < b.p1.weights();
    return a.p2.weights() < b.p2.weights();
  }
};

inline Profile pure_profile(const Game& g, std::size_t a, std::size_t b) {
  return {MixedStrategy::pure(Player::kOne, g.n1(), a),
          MixedStrategy::pure(Player::kTwo, g.n2(), b)};
}

inline void check_dimensions(const Game& g, const MixedStrategy& s) {
  if (s.size() != g.num_actions(s.player())) {
    throw GameError("strategy for player " +
                    std::to_string(static_cast<int>(s.player())) + " has " +
                    std::to_string(s.size()) + " weights, game has " +
                    std::to_string(g.num_actions(s.player())) + " actions");
  }
}

// Utility of player p for pure action `action` against the opponent's mixed strategy.
inline Rational action_utility(const Game& g, Player p, std::size_t action,
                               const MixedStrategy& opp) {
  check_dimensions(g, opp);
  Rational total = 0;
  for (std::size_t j = 0; j < opp.size(); ++j) {
    if (opp[j] == 0) continue;
    total += opp[j] * (p == Player::kOne ? g.u(p, action, j) : g.u(p, j, action));
  }
  return total;
}

inline std::pair<Rational, Rational> expected_utility(const Game& g,
                                                      const Profile& profile) {
  check_dimensions(g, profile.p1);
  check_dimensions(g, profile.p2);
  Rational v1 = 0;
  Rational v2 = 0;
  for (std::size_t a = 0; a < g.n1(); ++a) {
    if (profile.p1[a] == 0) continue;
    for (std::size_t b = 0; b < g.n2(); ++b) {
      if (profile.p2[b] == 0) continue;
      Rational w = profile.p1[a] * profile.p2[b];
      v1 += w * g.u1(a, b);
      v2 += w * g.u2(a, b);
    }
  }
  return {v1, v2};
}

inline ActionSet best_response_set(const Game& g, Player p,
                                   const MixedStrategy& opp) {
  if (opp.player() == p) throw GameError("opponent strategy belongs to the same player");
  ActionSet best;
  Rational best_value;
  for (std::size_t i = 0; i < g.num_actions(p); ++i) {
    Rational v = action_utility(g, p, i, opp);
    if (best.empty() || v > best_value) {
      best = {i};
      best_value = v;
    } else if (v == best_value) {
      best.push_back(i);
    }
  }
  return best;
}

inline Rational best_response_value(const Game& g, Player p,
                                    const MixedStrategy& opp) {
  Rational best = action_utility(g, p, 0, opp);
  for (std::size_t i = 1; i < g.num_actions(p); ++i) {
    best = std::max(best, action_utility(g, p, i, opp));
  }
  return best;
}

// br1[b]: P1's pure best responses to column b.
inline std::vector<ActionSet> pure_best_responses_p1(const Game& g) {
  std::vector<ActionSet> out(g.n2());
  for (std::size_t b = 0; b < g.n2(); ++b) {
    const Rational* best = nullptr;
    for (std::size_t a = 0; a < g.n1(); ++a) {
      if (best == nullptr || g.u1(a, b) > *best) {
        out[b] = {a};
        best = &g.u1(a, b);
      } else if (g.u1(a, b) == *best) {
        out[b].push_back(a);
      }
    }
  }
  return out;
}

// br2[a]: P2's pure best responses to row a.
inline std::vector<ActionSet> pure_best_responses_p2(const Game& g) {
  std::vector<ActionSet> out(g.n1());
  for (std::size_t a = 0; a < g.n1(); ++a) {
    const Rational* best = nullptr;
    for (std::size_t b = 0; b < g.n2(); ++b) {
      if (best == nullptr || g.u2(a, b) > *best) {
        out[a] = {b};
        best = &g.u2(a, b);
      } else if (g.u2(a, b) == *best) {
        out[a].push_back(b);
      }
    }
  }
  return out;
}

inline bool contains(const ActionSet& s, std::size_t x) {
  return std::find(s.begin(), s.end(), x) != s.end();
}

inline std::vector<Profile> pure_nash_equilibria(const Game& g) {
  auto br1 = pure_best_responses_p1(g);
  auto br2 = pure_best_responses_p2(g);
  std::vector<Profile> out;
  for (std::size_t a = 0; a < g.n1(); ++a) {
    for (std::size_t b : br2[a]) {
      if (contains(br1[b], a)) out.push_back(pure_profile(g, a, b));
    }
  }
  return out;
}

// Describes the first profitable unilateral deviation, if any.
inline std::optional<std::string> find_profitable_deviation(const Game& g,
                                                            const Profile& pr) {
  auto [v1, v2] = expected_utility(g, pr);
  for (std::size_t a = 0; a < g.n1(); ++a) {
    Rational d = action_utility(g, Player::kOne, a, pr.p2);
    if (d > v1) {
      return "P1 deviates to " + g.labels(Player::kOne)[a] + " (" + to_string(d) +
             " > " + to_string(v1) + ")";
    }
  }
  for (std::size_t b = 0; b < g.n2(); ++b) {
    Rational d = action_utility(g, Player::kTwo, b, pr.p1);
    if (d > v2) {
      return "P2 deviates to " + g.labels(Player::kTwo)[b] + " (" + to_string(d) +
             " > " + to_string(v2) + ")";
    }
  }
  return std::nullopt;
}

inline bool is_nash(const Game& g, const Profile& pr) {
  return !find_profitable_deviation(g, pr).has_value();
}

inline bool has_br_tiebreaking(const Game& g) {
  auto br1 = pure_best_responses_p1(g);
  for (std::size_t b = 0; b < g.n2(); ++b) {
    for (std::size_t a : br1[b]) {
      if (g.u2(a, b) != g.u2(br1[b].front(), b)) return true;
    }
  }
  return false;
}

inline bool is_zero_sum(const Game& g) {
  for (std::size_t a = 0; a < g.n1(); ++a) {
    for (std::size_t b = 0; b < g.n2(); ++b) {
      if (g.u1(a, b) + g.u2(a, b) != 0) return false;
    }
  }
  return true;
}

inline Rational max_payoff(const Game& g, Player p) {
  Rational m = g.u(p, 0, 0);
  for (std::size_t a = 0; a < g.n1(); ++a) {
    for (std::size_t b = 0; b < g.n2(); ++b) m = std::max(m, g.u(p, a, b));
  }
  return m;
}

inline std::string join_labels(const Game& g, Player p, const ActionSet& s,
                               const std::string& sep = ";") {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += sep;
    out += g.labels(p)[s[i]];
  }
  return out;
}

}  // namespace simgame

#endif  // SIMGAME_GAME_HPP_
