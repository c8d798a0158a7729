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
#ifndef SIMGAME_TESTS_SUPPORT_HPP_
#define SIMGAME_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simgame/simgame.hpp"

namespace simgame::testing {

inline Rational R(long n, long d = 1) { return Rational(n, d); }

inline Game make_game(const std::vector<std::vector<long>>& u1,
                      const std::vector<std::vector<long>>& u2) {
  const std::size_t n1 = u1.size(), n2 = u1.front().size();
  Matrix<Rational> m1(n1, n2), m2(n1, n2);
  std::vector<std::string> l1, l2;
  for (std::size_t a = 0; a < n1; ++a) {
    l1.push_back("a" + std::to_string(a));
    for (std::size_t b = 0; b < n2; ++b) {
      m1(a, b) = u1[a][b];
      m2(a, b) = u2[a][b];
    }
  }
  for (std::size_t b = 0; b < n2; ++b) l2.push_back("b" + std::to_string(b));
  return Game(l1, l2, m1, m2);
}

// Integer payoffs in [lo, hi]; with distinct set, no value repeats within a
// player's matrix.
inline Game random_game(std::mt19937_64& rng, std::size_t n1, std::size_t n2, long lo,
                        long hi, bool distinct) {
  std::vector<std::vector<long>> u[2];
  for (auto& m : u) {
    std::vector<long> pool;
    for (long v = lo; v <= hi; ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::size_t k = 0;
    m.assign(n1, std::vector<long>(n2));
    for (auto& row : m) {
      for (auto& x : row) x = distinct ? pool.at(k++) : pool[pick(rng)];
    }
  }
  return make_game(u[0], u[1]);
}

// Random game passing is_generic, with all payoffs distinct.
inline Game random_generic_game(std::mt19937_64& rng, std::size_t n1, std::size_t n2) {
  while (true) {
    Game g = random_game(rng, n1, n2, -60, 60, true);
    if (is_generic(g).generic) return g;
  }
}

inline std::set<Profile> profile_set(const std::vector<NEComponent>& comps) {
  std::set<Profile> out;
  for (const auto& c : comps) {
    for (const auto& p : vertex_profiles(c)) out.insert(p);
  }
  return out;
}

using ComponentKey = std::pair<std::set<RationalVector>, std::set<RationalVector>>;

// Components as (P1 vertex set, P2 vertex set), independent of order.
inline std::set<ComponentKey> component_set(const std::vector<NEComponent>& comps) {
  std::set<ComponentKey> out;
  for (const auto& c : comps) {
    ComponentKey k;
    for (const auto& x : c.p1_vertices) k.first.insert(x.weights());
    for (const auto& y : c.p2_vertices) k.second.insert(y.weights());
    out.insert(k);
  }
  return out;
}

// Support-enumeration oracle: vertices of every per-support indifference
// system, paired and filtered by the deviation check.
inline std::set<Profile> oracle_vertex_profiles(const Game& g) {
  std::set<MixedStrategy> xs, ys;
  auto embed = [](const lp::Vertex& v, const ActionSet& on, std::size_t n, Player p) {
    RationalVector w(n, Rational(0));
    for (std::size_t j = 0; j < on.size(); ++j) w[on[j]] = v.value[j];
    return MixedStrategy(p, std::move(w));
  };
  for (const auto& s1 : nonempty_subsets(g.n1())) {
    for (const auto& s2 : nonempty_subsets(g.n2())) {
      SupportPair sp{s1, s2};
      for (const auto& v : lp::vertices_at(indifference_system(g, sp, Player::kOne), 0)) {
        ys.insert(embed(v, s2, g.n2(), Player::kTwo));
      }
      for (const auto& v : lp::vertices_at(indifference_system(g, sp, Player::kTwo), 0)) {
        xs.insert(embed(v, s1, g.n1(), Player::kOne));
      }
    }
  }
  std::set<Profile> out;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      if (is_nash(g, {x, y})) out.insert({x, y});
    }
  }
  return out;
}

}  // namespace simgame::testing

#endif  // SIMGAME_TESTS_SUPPORT_HPP_
