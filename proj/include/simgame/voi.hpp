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
#ifndef SIMGAME_VOI_HPP_
#define SIMGAME_VOI_HPP_

#include <algorithm>

#include "simgame/errors.hpp"
#include "simgame/game.hpp"
#include "simgame/rational.hpp"

namespace simgame {

struct VoiReport {
  MixedStrategy strategy;
  Rational best_response_value;
  Rational clairvoyant_value;
  Rational voi;
};

// Value of information of simulation against a P2 strategy of the base game.
inline VoiReport voi_of(const Game& g, const MixedStrategy& pi2) {
  if (pi2.player() != Player::kTwo || pi2.size() != g.n2()) {
    throw PreconditionError("VoI needs a P2 strategy over the base game's actions");
  }
  VoiReport r;
  r.strategy = pi2;
  r.clairvoyant_value = 0;
  for (std::size_t b = 0; b < g.n2(); ++b) {
    if (pi2[b] == 0) continue;
    Rational best = g.u1(0, b);
    for (std::size_t a = 1; a < g.n1(); ++a) best = std::max(best, g.u1(a, b));
    r.clairvoyant_value += pi2[b] * best;
  }
  r.best_response_value = best_response_value(g, Player::kOne, pi2);
  r.voi = r.clairvoyant_value - r.best_response_value;
  return r;
}

// Smallest cost at which the base-game equilibrium remains an equilibrium once
// simulation is available.
inline Rational persistence_threshold(const Game& g, const Profile& ne) {
  if (auto dev = find_profitable_deviation(g, ne)) {
    throw VerificationError("profile is not a Nash equilibrium: " + *dev);
  }
  return voi_of(g, ne.p2).voi;
}

}  // namespace simgame

#endif  // SIMGAME_VOI_HPP_
