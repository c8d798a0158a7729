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
#ifndef SIMGAME_CORPUS_HPP_
#define SIMGAME_CORPUS_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "simgame/errors.hpp"
#include "simgame/game.hpp"
#include "simgame/matrix.hpp"
#include "simgame/rational.hpp"

namespace simgame {

namespace detail {

inline Game from_cells(std::vector<std::string> l1, std::vector<std::string> l2,
                       const std::vector<std::vector<std::pair<Rational, Rational>>>& cells) {
  Matrix<Rational> u1(l1.size(), l2.size()), u2(l1.size(), l2.size());
  for (std::size_t a = 0; a < l1.size(); ++a) {
    for (std::size_t b = 0; b < l2.size(); ++b) {
      u1(a, b) = cells[a][b].first;
      u2(a, b) = cells[a][b].second;
    }
  }
  return Game(std::move(l1), std::move(l2), std::move(u1), std::move(u2));
}

inline std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace detail

// P1 trusts (T) or walks out (WO); P2 cooperates (C) or defects (D).
inline Game gen_trust(const Rational& coop = 25, const Rational& defect_gain = 150,
                      const Rational& defect_loss = 150) {
  if (coop <= 0 || defect_gain <= 0 || defect_loss <= 0) {
    throw GameError("trust game parameters must be positive");
  }
  return detail::from_cells({"T", "WO"}, {"C", "D"},
                            {{{coop, coop}, {-defect_loss, defect_gain}},
                             {{0, 0}, {0, 0}}});
}

struct CafePrediction {
  ActionSet subset;
  Rational voi;     // (1 - 1/|I|) * harmonic mean of x over I
  Profile profile;  // the mixed equilibrium supported on I x I
};

struct CafesInstance {
  Game game;
  std::vector<CafePrediction> predictions;  // every nonempty I, in mask order
};

// Coordination on one of n cafés: (x_i, y_i) on the diagonal, (0, 0) elsewhere.
inline CafesInstance gen_cafes(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const std::size_t n = x.size();
  if (n == 0 || y.size() != n) throw GameError("cafes needs x and y of equal positive length");
  if (n > 20) throw GameError("cafes supports at most 20 actions");
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw GameError("cafe payoffs must be positive");
  }
  std::vector<std::vector<std::pair<Rational, Rational>>> cells(
      n, std::vector<std::pair<Rational, Rational>>(n, {Rational(0), Rational(0)}));
  for (std::size_t i = 0; i < n; ++i) cells[i][i] = {x[i], y[i]};
  CafesInstance inst{detail::from_cells(detail::numbered("cafe", n),
                                        detail::numbered("cafe", n), cells),
                     {}};
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    CafePrediction p;
    Rational inv_x = 0, inv_y = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      p.subset.push_back(i);
      inv_x += 1 / x[i];
      inv_y += 1 / y[i];
    }
    const auto k = static_cast<long>(p.subset.size());
    Rational harmonic = Rational(k) / inv_x;
    p.voi = (1 - Rational(1, k)) * harmonic;
    // pi_1(i) is proportional to 1/y_i and pi_2(i) to 1/x_i.
    RationalVector w1(n, Rational(0)), w2(n, Rational(0));
    for (auto i : p.subset) {
      w1[i] = (1 / y[i]) / inv_y;
      w2[i] = (1 / x[i]) / inv_x;
    }
    p.profile = {MixedStrategy(Player::kOne, w1), MixedStrategy(Player::kTwo, w2)};
    inst.predictions.push_back(std::move(p));
  }
  return inst;
}

// P1 guesses P2's number in 1..n: +1/-1 on a match, -1/+1 otherwise.
inline Game gen_guess_number(std::size_t n) {
  if (n < 2) throw GameError("guess-the-number needs n >= 2");
  std::vector<std::vector<std::pair<Rational, Rational>>> cells(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      cells[a].push_back(a == b ? std::pair<Rational, Rational>{1, -1}
                                : std::pair<Rational, Rational>{-1, 1});
    }
  }
  return detail::from_cells(detail::numbered("guess", n), detail::numbered("pick", n), cells);
}

// Joint Project outcome payoffs (P1, P2).
struct JointProjectPayoffs {
  static inline const std::pair<Rational, Rational> cooperate{100, 100};
  static inline const std::pair<Rational, Rational> right_guess{200, -10};
  static inline const std::pair<Rational, Rational> wrong_guess{-999, 123};
  static inline const std::pair<Rational, Rational> rejected{0, 0};
};

// Explicit form: P1 plays NoGuess or Guess_i; P2 plays Reject or Accept_i,
// where i is the password P2 picks. Size (k + 1) x (k + 1).
inline Game gen_joint_project_explicit(std::size_t k) {
  if (k < 1) throw GameError("password space must be at least 1");
  using P = JointProjectPayoffs;
  std::vector<std::string> l1{"NoGuess"}, l2{"Reject"};
  for (auto& s : detail::numbered("Guess", k)) l1.push_back(s);
  for (auto& s : detail::numbered("Accept", k)) l2.push_back(s);
  std::vector<std::vector<std::pair<Rational, Rational>>> cells(k + 1);
  for (std::size_t a = 0; a <= k; ++a) {
    cells[a].push_back(P::rejected);
    for (std::size_t b = 1; b <= k; ++b) {
      if (a == 0) {
        cells[a].push_back(P::cooperate);
      } else {
        cells[a].push_back(a == b ? P::right_guess : P::wrong_guess);
      }
    }
  }
  return detail::from_cells(l1, l2, cells);
}

// Reduced form: the guess row is the expectation over a uniformly drawn
// password, so a guess succeeds with probability 1/k.
inline Game gen_joint_project_reduced(const Integer& k) {
  if (k < 1) throw GameError("password space must be at least 1");
  using P = JointProjectPayoffs;
  Rational s = Rational(1) / Rational(k);
  std::pair<Rational, Rational> guess{s * P::right_guess.first + (1 - s) * P::wrong_guess.first,
                                      s * P::right_guess.second + (1 - s) * P::wrong_guess.second};
  return detail::from_cells({"NoGuess", "Guess"}, {"Reject", "Accept"},
                            {{P::rejected, P::cooperate}, {P::rejected, guess}});
}

// P1 is better off committing (U) than being able to react.
inline Game gen_commitment() {
  return detail::from_cells({"U", "D"}, {"L", "R"}, {{{3, 1}, {0, 0}}, {{2, 3}, {1, 2}}});
}

inline Game gen_battle_of_sexes() {
  return detail::from_cells({"Opera", "Football"}, {"Opera", "Football"},
                            {{{2, 1}, {0, 0}}, {{0, 0}, {1, 2}}});
}

inline Game gen_chicken() {
  return detail::from_cells({"Straight", "Swerve"}, {"Straight", "Swerve"},
                            {{{-5, -5}, {3, 1}}, {{1, 3}, {0, 0}}});
}

inline Game gen_stag_hunt() {
  return detail::from_cells({"Stag", "Hare"}, {"Stag", "Hare"},
                            {{{4, 4}, {1, 3}}, {{3, 1}, {2, 2}}});
}

// Families accepted by gen_named.
inline const std::vector<std::string>& named_families() {
  static const std::vector<std::string> f{"joint_project", "commitment", "battle_of_sexes",
                                          "chicken", "stag_hunt"};
  return f;
}

// k is the password space for joint_project; explicit selects the full form.
inline Game gen_named(const std::string& family, const Integer& k = 26,
                      bool explicit_form = false) {
  if (family == "joint_project") {
    if (!explicit_form) return gen_joint_project_reduced(k);
    if (k > 62) throw GameError("explicit joint project supports k <= 62");
    return gen_joint_project_explicit(static_cast<std::size_t>(k.convert_to<long>()));
  }
  if (family == "commitment") return gen_commitment();
  if (family == "battle_of_sexes" || family == "bos") return gen_battle_of_sexes();
  if (family == "chicken") return gen_chicken();
  if (family == "stag_hunt") return gen_stag_hunt();
  throw GameError("unknown game family " + family);
}

struct NamedGame {
  std::string name;
  Game game;
};

// Desk-scale corpus used by the property suites.
inline std::vector<NamedGame> default_corpus() {
  return {
      {"trust", gen_trust()},
      {"cafes3", gen_cafes({2, 3, 5}, {1, 1, 1}).game},
      {"guess2", gen_guess_number(2)},
      {"guess3", gen_guess_number(3)},
      {"guess4", gen_guess_number(4)},
      {"guess5", gen_guess_number(5)},
      {"joint_project_explicit3", gen_joint_project_explicit(3)},
      {"joint_project_reduced26", gen_joint_project_reduced(26)},
      {"commitment", gen_commitment()},
      {"battle_of_sexes", gen_battle_of_sexes()},
      {"chicken", gen_chicken()},
      {"stag_hunt", gen_stag_hunt()},
  };
}

}  // namespace simgame

#endif  // SIMGAME_CORPUS_HPP_
