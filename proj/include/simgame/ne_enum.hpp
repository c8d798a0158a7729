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
#ifndef SIMGAME_NE_ENUM_HPP_
#define SIMGAME_NE_ENUM_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "simgame/errors.hpp"
#include "simgame/exact_lp.hpp"
#include "simgame/game.hpp"
#include "simgame/rational.hpp"

namespace simgame {

using Mask = std::uint64_t;

inline Mask mask_of(const ActionSet& s) {
  Mask m = 0;
  for (auto a : s) m |= Mask(1) << a;
  return m;
}

inline ActionSet actions_of(Mask m) {
  ActionSet s;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1) s.push_back(i);
  }
  return s;
}

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Per-player action cap; SIMGAME_ACTION_CAP overrides the default of 12.
inline std::size_t action_cap() {
  if (const char* env = std::getenv("SIMGAME_ACTION_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 12;
}

inline void check_cap(const Game& g, std::size_t cap) {
  // Bit masks limit the hard ceiling to 63 actions per player.
  std::size_t limit = std::min<std::size_t>(cap, 63);
  if (g.n1() > limit || g.n2() > limit) {
    throw CapExceeded("game is " + std::to_string(g.n1()) + "x" +
                      std::to_string(g.n2()) + ", action cap is " +
                      std::to_string(limit));
  }
}

struct SupportPair {
  ActionSet s1;
  ActionSet s2;

  std::size_t total() const { return s1.size() + s2.size(); }

  // Canonical order: total size, then S1, then S2.
  friend bool operator<(const SupportPair& a, const SupportPair& b) {
    return std::make_tuple(a.total(), a.s1, a.s2) <
           std::make_tuple(b.total(), b.s1, b.s2);
  }
  friend bool operator==(const SupportPair& a, const SupportPair& b) {
    return a.s1 == b.s1 && a.s2 == b.s2;
  }
};

struct NEComponent {
  SupportPair support;
  std::vector<MixedStrategy> p1_vertices;
  std::vector<MixedStrategy> p2_vertices;

  friend bool operator==(const NEComponent& a, const NEComponent& b) {
    return a.support == b.support && a.p1_vertices == b.p1_vertices &&
           a.p2_vertices == b.p2_vertices;
  }
};

// Vertex of the best-response polyhedron over the owner's mixed strategies.
// The strategy is affine in c; slope is zero for fixed-c vertices.
struct PolytopeVertex {
  RationalVector base;
  RationalVector slope;
  Mask support = 0;
  Mask responses = 0;
  lp::Interval interval;
  std::vector<lp::Basis> bases;

  RationalVector at(const Rational& c) const {
    RationalVector x(base);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * slope[i];
    return x;
  }
};

// The polyhedron {(z, gamma) : z in the owner's simplex,
// u_opp(o, z) - c * adjustments[o] <= gamma for every opponent action o},
// written with one slack per opponent action. Adjustments move the parametric
// cost of opponent actions to the right-hand side.
class ResponsePolytope {
 public:
  ResponsePolytope(const Game& g, Player owner, RationalVector adjustments = {})
      : owner_(owner),
        k_(g.num_actions(owner)),
        m_(g.num_actions(opponent(owner))) {
    if (adjustments.empty()) adjustments.assign(m_, Rational(0));
    if (adjustments.size() != m_) {
      throw PreconditionError("adjustment vector does not match action count");
    }
    const std::size_t n = k_ + m_ + 1;
    Player opp = opponent(owner);
    sys_.kinds.assign(n, lp::VarKind::kNonneg);
    sys_.kinds[n - 1] = lp::VarKind::kFree;
    sys_.a = Matrix<Rational>(m_ + 1, n, Rational(0));
    sys_.rhs_base.assign(m_ + 1, Rational(0));
    sys_.rhs_slope.assign(m_ + 1, Rational(0));
    for (std::size_t i = 0; i < k_; ++i) sys_.a(0, i) = 1;
    sys_.rhs_base[0] = 1;
    for (std::size_t o = 0; o < m_; ++o) {
      for (std::size_t i = 0; i < k_; ++i) {
        sys_.a(o + 1, i) = opp == Player::kOne ? g.u(opp, o, i) : g.u(opp, i, o);
      }
      sys_.a(o + 1, k_ + o) = 1;
      sys_.a(o + 1, n - 1) = -1;
      sys_.rhs_slope[o + 1] = adjustments[o];
    }
    for (auto& p : lp::parametric_solutions(sys_)) {
      if (!p.feasible.empty()) solutions_.push_back(std::move(p));
    }
  }

  Player owner() const { return owner_; }
  const lp::LinearSystem& system() const { return sys_; }
  const std::vector<lp::ParametricSolution>& solutions() const { return solutions_; }

  // Vertices at a fixed parameter value, deduplicated and sorted by value.
  std::vector<PolytopeVertex> at(const Rational& c) const {
    std::map<RationalVector, PolytopeVertex> found;
    for (const auto& p : solutions_) {
      if (!p.feasible.contains(c)) continue;
      RationalVector x = p.at(c);
      RationalVector z(x.begin(), x.begin() + k_);
      auto it = found.find(z);
      if (it != found.end()) {
        it->second.bases.push_back(p.basis);
        continue;
      }
      PolytopeVertex v;
      v.base = z;
      v.slope.assign(k_, Rational(0));
      label(x, &v);
      v.interval = lp::Interval::closed(c, c);
      v.bases.push_back(p.basis);
      found.emplace(std::move(z), std::move(v));
    }
    std::vector<PolytopeVertex> out;
    for (auto& [z, v] : found) out.push_back(std::move(v));
    return out;
  }

  // Vertices that exist on all of [lo, hi] as affine functions of c, labelled
  // at the midpoint. Endpoints of the interval must be consecutive endpoints
  // (or cover a stretch with no endpoint inside) for labels to be constant.
  std::vector<PolytopeVertex> on(const Rational& lo, const Rational& hi) const {
    Rational mid = (lo + hi) / 2;
    std::map<std::pair<RationalVector, RationalVector>, PolytopeVertex> found;
    for (const auto& p : solutions_) {
      if (!p.feasible.covers(lo, hi)) continue;
      std::pair<RationalVector, RationalVector> key{
          RationalVector(p.value_base.begin(), p.value_base.begin() + k_),
          RationalVector(p.value_slope.begin(), p.value_slope.begin() + k_)};
      auto it = found.find(key);
      if (it != found.end()) {
        it->second.bases.push_back(p.basis);
        it->second.interval = it->second.interval.intersect(p.feasible);
        continue;
      }
      PolytopeVertex v;
      v.base = key.first;
      v.slope = key.second;
      label(p.at(mid), &v);
      v.interval = p.feasible;
      v.bases.push_back(p.basis);
      found.emplace(std::move(key), std::move(v));
    }
    std::vector<PolytopeVertex> out;
    for (auto& [k, v] : found) out.push_back(std::move(v));
    return out;
  }

  // Sorted finite endpoints of all basic feasibility intervals.
  std::vector<Rational> endpoints() const {
    std::set<Rational> e;
    for (const auto& p : solutions_) {
      if (p.feasible.lo()) e.insert(*p.feasible.lo());
      if (p.feasible.hi()) e.insert(*p.feasible.hi());
    }
    return {e.begin(), e.end()};
  }

 private:
  void label(const RationalVector& x, PolytopeVertex* v) const {
    v->support = 0;
    v->responses = 0;
    for (std::size_t i = 0; i < k_; ++i) {
      if (x[i] > 0) v->support |= Mask(1) << i;
    }
    for (std::size_t o = 0; o < m_; ++o) {
      if (x[k_ + o] == 0) v->responses |= Mask(1) << o;
    }
  }

  Player owner_;
  std::size_t k_;
  std::size_t m_;
  lp::LinearSystem sys_;
  std::vector<lp::ParametricSolution> solutions_;
};

// A component as index sets into the P1 and P2 vertex lists.
struct ComponentIndex {
  SupportPair support;
  std::vector<std::size_t> v1;
  std::vector<std::size_t> v2;
};

inline constexpr std::size_t kSupportPairCap = std::size_t(1) << 20;

// Groups labelled vertices into components, one per support pair (S1, S2)
// with supp(x) <= S1 <= br1(y) and supp(y) <= S2 <= br2(x) for some vertices,
// deduplicated by vertex sets and listed in canonical support order.
inline std::vector<ComponentIndex> assemble_components(
    const std::vector<PolytopeVertex>& p1, const std::vector<PolytopeVertex>& p2) {
  std::set<std::pair<Mask, Mask>> pairs;
  for (const auto& x : p1) {
    for (const auto& y : p2) {
      if (!is_subset(x.support, y.responses) || !is_subset(y.support, x.responses)) {
        continue;
      }
      Mask free1 = y.responses & ~x.support;
      Mask free2 = x.responses & ~y.support;
      for (Mask a = free1;; a = (a - 1) & free1) {
        for (Mask b = free2;; b = (b - 1) & free2) {
          pairs.emplace(x.support | a, y.support | b);
          if (pairs.size() > kSupportPairCap) {
            throw CapExceeded("too many support pairs in a degenerate game");
          }
          if (b == 0) break;
        }
        if (a == 0) break;
      }
    }
  }
  std::vector<SupportPair> order;
  order.reserve(pairs.size());
  for (const auto& [s1, s2] : pairs) order.push_back({actions_of(s1), actions_of(s2)});
  std::sort(order.begin(), order.end());

  std::vector<ComponentIndex> out;
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
  for (auto& sp : order) {
    Mask s1 = mask_of(sp.s1);
    Mask s2 = mask_of(sp.s2);
    ComponentIndex ci;
    for (std::size_t i = 0; i < p1.size(); ++i) {
      if (is_subset(p1[i].support, s1) && is_subset(s2, p1[i].responses)) {
        ci.v1.push_back(i);
      }
    }
    for (std::size_t j = 0; j < p2.size(); ++j) {
      if (is_subset(p2[j].support, s2) && is_subset(s1, p2[j].responses)) {
        ci.v2.push_back(j);
      }
    }
    if (ci.v1.empty() || ci.v2.empty()) continue;
    if (!seen.emplace(ci.v1, ci.v2).second) continue;
    ci.support = std::move(sp);
    out.push_back(std::move(ci));
  }
  return out;
}

// All Nash equilibria as components, in canonical support order.
inline std::vector<NEComponent> all_nash_equilibria(const Game& g,
                                                    std::size_t cap = action_cap()) {
  check_cap(g, cap);
  ResponsePolytope poly1(g, Player::kOne);
  ResponsePolytope poly2(g, Player::kTwo);
  auto v1 = poly1.at(0);
  auto v2 = poly2.at(0);
  std::vector<NEComponent> out;
  for (const auto& ci : assemble_components(v1, v2)) {
    NEComponent comp;
    comp.support = ci.support;
    for (auto i : ci.v1) comp.p1_vertices.emplace_back(Player::kOne, v1[i].base);
    for (auto j : ci.v2) comp.p2_vertices.emplace_back(Player::kTwo, v2[j].base);
    out.push_back(std::move(comp));
  }
  return out;
}

// Indifference system of `player` on support `support`. Variables are the
// opponent's weights on its support, one slack per out-of-support action of
// `player`, and the indifference value gamma. Row 0 is the normalization;
// row 1 + a belongs to action a of `player`. adjustments[a] is the parametric
// cost on action a and becomes the right-hand-side slope.
inline lp::LinearSystem indifference_system(const Game& g, const SupportPair& support,
                                            Player player,
                                            RationalVector adjustments = {}) {
  if (support.s1.empty() || support.s2.empty()) {
    throw PreconditionError("support pair must be nonempty");
  }
  const std::size_t m = g.num_actions(player);
  if (adjustments.empty()) adjustments.assign(m, Rational(0));
  const ActionSet& own = player == Player::kOne ? support.s1 : support.s2;
  const ActionSet& opp = player == Player::kOne ? support.s2 : support.s1;
  ActionSet outside;
  for (std::size_t a = 0; a < m; ++a) {
    if (!contains(own, a)) outside.push_back(a);
  }
  const std::size_t n = opp.size() + outside.size() + 1;
  lp::LinearSystem s;
  s.kinds.assign(n, lp::VarKind::kNonneg);
  s.kinds[n - 1] = lp::VarKind::kFree;
  s.a = Matrix<Rational>(m + 1, n, Rational(0));
  s.rhs_base.assign(m + 1, Rational(0));
  s.rhs_slope.assign(m + 1, Rational(0));
  for (std::size_t j = 0; j < opp.size(); ++j) s.a(0, j) = 1;
  s.rhs_base[0] = 1;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t j = 0; j < opp.size(); ++j) {
      s.a(a + 1, j) = player == Player::kOne ? g.u(player, a, opp[j])
                                             : g.u(player, opp[j], a);
    }
    auto it = std::find(outside.begin(), outside.end(), a);
    if (it != outside.end()) s.a(a + 1, opp.size() + (it - outside.begin())) = 1;
    s.a(a + 1, n - 1) = -1;
    s.rhs_slope[a + 1] = adjustments[a];
  }
  return s;
}

// Component of one support pair via its two indifference systems; every vertex
// pair is checked for unilateral deviations.
inline std::optional<NEComponent> component_for_support(const Game& g,
                                                        const SupportPair& support) {
  auto embed = [](const lp::Vertex& v, const ActionSet& on, std::size_t n, Player p) {
    RationalVector w(n, Rational(0));
    for (std::size_t j = 0; j < on.size(); ++j) w[on[j]] = v.value[j];
    return MixedStrategy(p, std::move(w));
  };
  std::vector<MixedStrategy> p2;
  for (const auto& v : lp::vertices_at(indifference_system(g, support, Player::kOne), 0)) {
    p2.push_back(embed(v, support.s2, g.n2(), Player::kTwo));
  }
  std::vector<MixedStrategy> p1;
  for (const auto& v : lp::vertices_at(indifference_system(g, support, Player::kTwo), 0)) {
    p1.push_back(embed(v, support.s1, g.n1(), Player::kOne));
  }
  std::sort(p1.begin(), p1.end());
  std::sort(p2.begin(), p2.end());
  NEComponent comp{support, {}, {}};
  for (const auto& x : p1) {
    bool ok = std::all_of(p2.begin(), p2.end(),
                          [&](const MixedStrategy& y) { return is_nash(g, {x, y}); });
    if (ok) comp.p1_vertices.push_back(x);
  }
  for (const auto& y : p2) {
    bool ok = std::all_of(p1.begin(), p1.end(),
                          [&](const MixedStrategy& x) { return is_nash(g, {x, y}); });
    if (ok) comp.p2_vertices.push_back(y);
  }
  if (comp.p1_vertices.empty() || comp.p2_vertices.empty()) return std::nullopt;
  return comp;
}

// All nonempty subsets of {0..n-1}, in increasing mask order.
inline std::vector<ActionSet> nonempty_subsets(std::size_t n) {
  std::vector<ActionSet> out;
  for (Mask m = 1; m < (Mask(1) << n); ++m) out.push_back(actions_of(m));
  return out;
}

// Every equilibrium profile spanned by a component.
inline std::vector<Profile> vertex_profiles(const NEComponent& c) {
  std::vector<Profile> out;
  for (const auto& x : c.p1_vertices) {
    for (const auto& y : c.p2_vertices) out.push_back({x, y});
  }
  return out;
}

}  // namespace simgame

#endif  // SIMGAME_NE_ENUM_HPP_
