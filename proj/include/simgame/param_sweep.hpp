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
#ifndef SIMGAME_PARAM_SWEEP_HPP_
#define SIMGAME_PARAM_SWEEP_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "simgame/analysis.hpp"
#include "simgame/deviation.hpp"
#include "simgame/errors.hpp"
#include "simgame/exact_lp.hpp"
#include "simgame/game.hpp"
#include "simgame/ne_enum.hpp"
#include "simgame/rational.hpp"
#include "simgame/sim_build.hpp"

namespace simgame {

struct BreakpointSet {
  std::vector<Rational> values;  // strictly increasing, starts at 0
};

struct DroppedCandidate {
  Rational c;
  std::string reason;
};

// Equilibria (p1, p2_base + c * p2_slope) of the simulation game for c in [lo, hi].
struct TrajectorySegment {
  Rational lo;
  Rational hi;
  MixedStrategy p1;
  RationalVector p2_base;
  RationalVector p2_slope;
  SupportPair support;

  MixedStrategy p2_at(const Rational& c) const {
    RationalVector w(p2_base);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += c * p2_slope[i];
    return MixedStrategy(Player::kTwo, std::move(w));
  }
  Profile at(const Rational& c) const { return {p1, p2_at(c)}; }
};

struct SegmentList {
  std::vector<TrajectorySegment> segments;
  std::vector<std::string> diagnostics;
};

struct LimitEquilibrium {
  Profile profile;
  TrajectorySegment witness;
};

// Equilibrium component with P2 vertices affine in c.
struct SymbolicComponent {
  SupportPair support;
  std::vector<RationalVector> p1;
  std::vector<std::pair<RationalVector, RationalVector>> p2;

  friend bool operator==(const SymbolicComponent& a, const SymbolicComponent& b) {
    return a.support == b.support && a.p1 == b.p1 && a.p2 == b.p2;
  }
};

struct NumericComponent {
  SupportPair support;
  std::vector<RationalVector> p1;
  std::vector<RationalVector> p2;

  friend bool operator==(const NumericComponent& a, const NumericComponent& b) {
    return a.support == b.support && a.p1 == b.p1 && a.p2 == b.p2;
  }
};

using SymbolicStructure = std::vector<SymbolicComponent>;
using NumericStructure = std::vector<NumericComponent>;

// Drops components whose vertex sets repeat an earlier one.
inline NumericStructure dedup_components(NumericStructure s) {
  NumericStructure out;
  std::set<std::pair<std::vector<RationalVector>, std::vector<RationalVector>>> seen;
  for (auto& c : s) {
    if (seen.emplace(c.p1, c.p2).second) out.push_back(std::move(c));
  }
  return out;
}

inline NumericStructure evaluate(const SymbolicStructure& s, const Rational& c) {
  NumericStructure out;
  for (const auto& comp : s) {
    NumericComponent n{comp.support, comp.p1, {}};
    for (const auto& [base, slope] : comp.p2) {
      RationalVector v(base);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * slope[i];
      n.p2.push_back(std::move(v));
    }
    std::sort(n.p2.begin(), n.p2.end());
    n.p2.erase(std::unique(n.p2.begin(), n.p2.end()), n.p2.end());
    out.push_back(std::move(n));
  }
  return dedup_components(std::move(out));
}

inline NumericStructure to_numeric(const std::vector<NEComponent>& comps) {
  NumericStructure out;
  for (const auto& c : comps) {
    NumericComponent n{c.support, {}, {}};
    for (const auto& x : c.p1_vertices) n.p1.push_back(x.weights());
    for (const auto& y : c.p2_vertices) n.p2.push_back(y.weights());
    out.push_back(std::move(n));
  }
  return out;
}

// Equilibrium structure of the simulation game as a function of the cost c.
// P1's best-response polytope does not depend on c; P2's polytope carries the
// cost of SIM on the right-hand side of its SIM row.
class CostSweep {
 public:
  CostSweep(Game base, BestResponsePolicy policy, std::size_t cap = action_cap())
      : base_((check_cap(base, cap), std::move(base))),
        policy_(std::move(policy)),
        augmented0_(build(base_, 0, policy_).augmented),
        threshold_(upper_threshold(base_)),
        poly1_(augmented0_, Player::kOne),
        poly2_(augmented0_, Player::kTwo, sim_adjustments(base_)),
        p1_vertices_(poly1_.at(0)) {}

  const Game& base() const { return base_; }
  const BestResponsePolicy& policy() const { return policy_; }
  const Rational& upper_threshold_value() const { return threshold_; }
  Rational sweep_end() const { return threshold_ + 1; }

  Game augmented_at(const Rational& c) const { return build(base_, c, policy_).augmented; }

  // 0 plus every finite endpoint of P2's parametric vertices in (0, T + 1).
  std::vector<Rational> candidates() const {
    std::vector<Rational> out{Rational(0)};
    for (const auto& e : poly2_.endpoints()) {
      if (e > 0 && e < sweep_end()) out.push_back(e);
    }
    return out;
  }

  SymbolicStructure structure_on(const Rational& lo, const Rational& hi) const {
    auto v2 = poly2_.on(lo, hi);
    SymbolicStructure out;
    for (const auto& ci : assemble_components(p1_vertices_, v2)) {
      SymbolicComponent s{ci.support, {}, {}};
      for (auto i : ci.v1) s.p1.push_back(p1_vertices_[i].base);
      for (auto j : ci.v2) s.p2.emplace_back(v2[j].base, v2[j].slope);
      out.push_back(std::move(s));
    }
    return out;
  }

  NumericStructure structure_at(const Rational& c) const {
    auto v2 = poly2_.at(c);
    NumericStructure out;
    for (const auto& ci : assemble_components(p1_vertices_, v2)) {
      NumericComponent n{ci.support, {}, {}};
      for (auto i : ci.v1) n.p1.push_back(p1_vertices_[i].base);
      for (auto j : ci.v2) n.p2.push_back(v2[j].base);
      out.push_back(std::move(n));
    }
    return out;
  }

  const BreakpointSet& breakpoints() const {
    if (!breakpoints_) compute(false);
    return *breakpoints_;
  }

  // Candidates rejected because nothing changes across them.
  const std::vector<DroppedCandidate>& dropped() const {
    if (!breakpoints_) compute(false);
    return dropped_;
  }

  // e_1, or T + 1 when 0 is the only breakpoint.
  Rational first_interval_end() const {
    if (breakpoints_) {
      return breakpoints_->values.size() > 1 ? breakpoints_->values[1] : sweep_end();
    }
    return compute(true);
  }

  std::vector<std::pair<Rational, Rational>> intervals() const {
    const auto& v = breakpoints().values;
    std::vector<std::pair<Rational, Rational>> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.emplace_back(v[i], i + 1 < v.size() ? v[i + 1] : sweep_end());
    }
    return out;
  }

  SegmentList trajectories(std::size_t l) const {
    auto iv = intervals();
    if (l >= iv.size()) throw PreconditionError("interval index out of range");
    return segments_on(iv[l].first, iv[l].second);
  }

  SegmentList all_trajectories() const {
    SegmentList out;
    for (std::size_t l = 0; l < intervals().size(); ++l) {
      auto s = trajectories(l);
      out.segments.insert(out.segments.end(), s.segments.begin(), s.segments.end());
      out.diagnostics.insert(out.diagnostics.end(), s.diagnostics.begin(),
                             s.diagnostics.end());
    }
    return out;
  }

  std::vector<LimitEquilibrium> limit_equilibria() const {
    std::vector<LimitEquilibrium> out;
    std::set<Profile> seen;
    for (auto& seg : trajectories(0).segments) {
      Profile p = seg.at(0);
      if (seen.insert(p).second) out.push_back({p, seg});
    }
    return out;
  }

  // Segments on [lo, hi]; lo and hi must not straddle a candidate.
  SegmentList segments_on(const Rational& lo, const Rational& hi) const {
    SegmentList out;
    Rational mid = (lo + hi) / 2;
    Game g_lo = augmented_at(lo);
    Game g_mid = augmented_at(mid);
    Game g_hi = augmented_at(hi);
    std::set<std::pair<RationalVector, std::pair<RationalVector, RationalVector>>> seen;
    for (const auto& comp : structure_on(lo, hi)) {
      for (const auto& x : comp.p1) {
        for (const auto& y : comp.p2) {
          if (!seen.emplace(x, y).second) continue;
          TrajectorySegment seg{lo, hi, MixedStrategy(Player::kOne, x), y.first, y.second, {}};
          seg.support = {seg.p1.support(), seg.p2_at(mid).support()};
          for (const auto& [c, g] : {std::pair{lo, &g_lo}, std::pair{mid, &g_mid},
                                     std::pair{hi, &g_hi}}) {
            if (auto dev = find_profitable_deviation(*g, seg.at(c))) {
              out.diagnostics.push_back("segment on [" + to_string(lo) + ", " +
                                        to_string(hi) + "] fails at c=" + to_string(c) +
                                        ": " + *dev);
            }
          }
          out.segments.push_back(std::move(seg));
        }
      }
    }
    return out;
  }

  // Keeps the candidates across which the equilibrium structure changes.
  // The list must be sorted, start at 0, lie in [0, T + 1) and contain
  // every element of candidates().
  BreakpointSet filter_candidates(const std::vector<Rational>& cand,
                                  std::vector<DroppedCandidate>* dropped = nullptr) const {
    BreakpointSet bs;
    scan(cand, false, &bs, dropped);
    return bs;
  }

 private:
  Rational compute(bool stop_at_first) const {
    if (stop_at_first) return scan(candidates(), true, nullptr, nullptr);
    BreakpointSet bs;
    std::vector<DroppedCandidate> dropped;
    scan(candidates(), false, &bs, &dropped);
    breakpoints_ = std::move(bs);
    dropped_ = std::move(dropped);
    return breakpoints_->values.size() > 1 ? breakpoints_->values[1] : sweep_end();
  }

  // Returns the first kept candidate after 0, or T + 1.
  Rational scan(const std::vector<Rational>& cand, bool stop_at_first, BreakpointSet* bs,
                std::vector<DroppedCandidate>* dropped) const {
    std::vector<std::optional<SymbolicStructure>> cache(cand.size());
    auto on = [&](std::size_t i) -> const SymbolicStructure& {
      if (!cache[i]) {
        Rational hi = i + 1 < cand.size() ? cand[i + 1] : sweep_end();
        cache[i] = structure_on(cand[i], hi);
      }
      return *cache[i];
    };
    std::optional<Rational> first;
    if (bs) bs->values.push_back(cand.front());
    for (std::size_t i = 1; i < cand.size(); ++i) {
      const auto& left = on(i - 1);
      const auto& right = on(i);
      bool same = left == right && evaluate(left, cand[i]) == structure_at(cand[i]);
      if (same) {
        if (dropped) {
          dropped->push_back({cand[i], "equilibrium structure is identical on both sides"});
        }
        continue;
      }
      if (!first) first = cand[i];
      if (stop_at_first) break;
      if (bs) bs->values.push_back(cand[i]);
    }
    return first ? *first : sweep_end();
  }

  Game base_;
  BestResponsePolicy policy_;
  Game augmented0_;
  Rational threshold_;
  ResponsePolytope poly1_;
  ResponsePolytope poly2_;
  std::vector<PolytopeVertex> p1_vertices_;
  mutable std::optional<BreakpointSet> breakpoints_;
  mutable std::vector<DroppedCandidate> dropped_;
};

inline BreakpointSet breakpoints(const Game& g, const BestResponsePolicy& policy) {
  return CostSweep(g, policy).breakpoints();
}

inline SegmentList trajectories(const Game& g, const BestResponsePolicy& policy,
                                std::size_t interval_index) {
  return CostSweep(g, policy).trajectories(interval_index);
}

inline std::vector<LimitEquilibrium> limit_equilibria(const Game& g,
                                                      const BestResponsePolicy& policy) {
  return CostSweep(g, policy).limit_equilibria();
}

// Per-support construction of breakpoint candidates: every support pair of
// the augmented game, both indifference systems, every basis. Exponential in
// the action counts; intended for small games.
inline std::vector<Rational> candidate_breakpoints_by_support(
    const Game& g, const BestResponsePolicy& policy) {
  Game aug = build(g, 0, policy).augmented;
  RationalVector adj = sim_adjustments(g);
  std::set<Rational> out;
  auto collect = [&](const lp::LinearSystem& s) {
    auto reduced = lp::row_reduce(s);
    if (auto* u = std::get_if<lp::Unsolvable>(&reduced)) {
      if (u->only_at) out.insert(*u->only_at);
      return;
    }
    for (const auto& p : lp::parametric_solutions(std::get<lp::LinearSystem>(reduced))) {
      if (p.feasible.lo()) out.insert(*p.feasible.lo());
      if (p.feasible.hi()) out.insert(*p.feasible.hi());
    }
  };
  for (const auto& s1 : nonempty_subsets(aug.n1())) {
    for (const auto& s2 : nonempty_subsets(aug.n2())) {
      SupportPair sp{s1, s2};
      collect(indifference_system(aug, sp, Player::kOne, adj));
      collect(indifference_system(aug, sp, Player::kTwo));
    }
  }
  return {out.begin(), out.end()};
}

struct ExtremeRegimes {
  // Pure commitment equilibria of the base game with P2 leading.
  std::vector<CommitmentOutcome> negative_cost_commitments;
  // P2 actions maximizing u_2(SIM, b) under the policy; P2's support for c < 0.
  ActionSet policy_commitments;
  Rational upper_threshold;
};

inline ExtremeRegimes extreme_regimes(const Game& g, const BestResponsePolicy& policy) {
  ExtremeRegimes r;
  r.negative_cost_commitments = pure_commitment_equilibria(g, Player::kTwo);
  Game aug = build(g, 0, policy).augmented;
  const std::size_t s = g.n1();
  Rational best = aug.u2(s, 0);
  for (std::size_t b = 0; b < g.n2(); ++b) best = std::max(best, aug.u2(s, b));
  for (std::size_t b = 0; b < g.n2(); ++b) {
    if (aug.u2(s, b) == best) r.policy_commitments.push_back(b);
  }
  r.upper_threshold = upper_threshold(g);
  return r;
}

struct CheapNEDecomposition {
  Profile baseline;  // over the base game's actions
  MixedStrategy deviation;
  Rational alpha;
  Rational sim_prob;
  std::vector<std::pair<std::size_t, DeviationClass>> deviation_class;
};

// Splits a cheap-simulation equilibrium into baseline and deviation policies
// and checks the structural conditions on them.
inline CheapNEDecomposition decompose_cheap_ne(const Game& g, const Rational& c,
                                               const Profile& ne) {
  const std::size_t n1 = g.n1();
  const std::size_t n2 = g.n2();
  if (ne.p1.size() != n1 + 1 || ne.p2.size() != n2) {
    throw PreconditionError("profile must be over the simulation game's actions");
  }
  if (c <= 0) throw PreconditionError("cost must be positive");
  const Rational p = ne.p1[n1];
  if (p <= 0 || p >= 1) {
    throw PreconditionError("profile must simulate with probability in (0, 1)");
  }
  if (has_br_tiebreaking(g)) {
    throw PreconditionError("game admits best-response utility tiebreaking");
  }
  auto policy = default_policy(g);
  Game aug = build(g, c, policy).augmented;
  if (auto dev = find_profitable_deviation(aug, ne)) {
    throw VerificationError("not an equilibrium at c=" + to_string(c) + ": " + *dev);
  }
  auto br1 = pure_best_responses_p1(g);
  auto fail = [](const std::string& what) { throw VerificationError(what); };

  RationalVector b1(n1);
  for (std::size_t a = 0; a < n1; ++a) b1[a] = ne.p1[a] / (1 - p);
  MixedStrategy base1(Player::kOne, b1);
  Mask supp1 = mask_of(base1.support());

  // Baseline actions: compatible with the baseline policy and best for P2
  // among compatible actions.
  ActionSet compatible;
  for (auto b : ne.p2.support()) {
    if (is_subset(supp1, mask_of(br1[b]))) compatible.push_back(b);
  }
  auto u2br = [&](std::size_t b) { return aug.u2(n1, b); };
  ActionSet bset;
  ActionSet dset;
  if (!compatible.empty()) {
    Rational best = u2br(compatible.front());
    for (auto b : compatible) best = std::max(best, u2br(b));
    for (auto b : ne.p2.support()) {
      (contains(compatible, b) && u2br(b) == best ? bset : dset).push_back(b);
    }
  }
  if (bset.empty()) fail("no P2 action is compatible with the baseline policy");
  if (dset.empty()) fail("no deviation mass");
  Rational mass_b = 0;
  Rational mass_d = 0;
  for (auto b : bset) mass_b += ne.p2[b];
  for (auto d : dset) mass_d += ne.p2[d];
  RationalVector wb(n2, Rational(0));
  RationalVector wd(n2, Rational(0));
  for (auto b : bset) wb[b] = ne.p2[b] / mass_b;
  for (auto d : dset) wd[d] = ne.p2[d] / mass_d;
  CheapNEDecomposition out{{base1, MixedStrategy(Player::kTwo, wb)},
                           MixedStrategy(Player::kTwo, wd), mass_d / c, p, {}};

  // Baseline actions best-respond to each other.
  for (auto a : base1.support()) {
    for (auto b : bset) {
      if (!contains(br1[b], a)) fail("baseline P1 action is not a best response");
    }
  }
  // Baseline P2 actions are optimal commitments for the baseline policy.
  Rational opt;
  bool any = false;
  for (std::size_t b = 0; b < n2; ++b) {
    if (!is_subset(supp1, mask_of(br1[b]))) continue;
    if (!any || u2br(b) > opt) opt = u2br(b);
    any = true;
  }
  for (auto b : bset) {
    if (u2br(b) != opt) fail("baseline action is not an optimal commitment: " + g.labels(Player::kTwo)[b]);
  }
  // No baseline P1 action answers every deviation.
  for (auto a : base1.support()) {
    bool everywhere = std::all_of(dset.begin(), dset.end(),
                                  [&](std::size_t d) { return contains(br1[d], a); });
    if (everywhere) fail(g.labels(Player::kOne)[a] + " is a best response to every deviation");
  }
  // Deviations are in the greater or less class with maximal ratio.
  const Rational ub = expected_utility(g, out.baseline).second;
  auto x_of = [&](std::size_t d) { return action_utility(g, Player::kTwo, d, base1); };
  std::map<DeviationClass, Rational> best_ratio;
  for (std::size_t d = 0; d < n2; ++d) {
    auto cls = classify_deviation(x_of(d), ub, u2br(d));
    if (cls != DeviationClass::kGreater && cls != DeviationClass::kLess) continue;
    Rational r = deviation_ratio(cls, x_of(d), ub, u2br(d));
    auto it = best_ratio.find(cls);
    if (it == best_ratio.end() || r > it->second) best_ratio[cls] = r;
  }
  for (auto d : dset) {
    auto cls = classify_deviation(x_of(d), ub, u2br(d));
    if (cls == DeviationClass::kProfitable || cls == DeviationClass::kDominated) {
      fail("deviation class is neither greater nor less at " + g.labels(Player::kTwo)[d]);
    }
    if (cls != DeviationClass::kEqual &&
        deviation_ratio(cls, x_of(d), ub, u2br(d)) != best_ratio[cls]) {
      fail("deviation ratio is not maximal at " + g.labels(Player::kTwo)[d]);
    }
    out.deviation_class.emplace_back(d, cls);
  }
  // Reconstruction and the trajectory through c/2 and 0.
  for (const Rational& cc : {c, c / 2, Rational(0)}) {
    RationalVector w(n2);
    for (std::size_t b = 0; b < n2; ++b) {
      w[b] = (1 - out.alpha * cc) * wb[b] + out.alpha * cc * wd[b];
    }
    MixedStrategy y(Player::kTwo, w);
    if (cc == c && y != ne.p2) fail("reconstruction of P2's strategy fails");
    Game gc = build(g, cc, policy).augmented;
    if (auto dev = find_profitable_deviation(gc, {ne.p1, y})) {
      fail("trajectory fails at c=" + to_string(cc) + ": " + *dev);
    }
  }
  return out;
}

inline void write_breakpoints_csv(std::ostream& os, const BreakpointSet& bs) {
  os << "index,c\n";
  for (std::size_t i = 0; i < bs.values.size(); ++i) {
    os << i << "," << to_string(bs.values[i]) << "\n";
  }
}

inline void write_segments_csv(std::ostream& os, const Game& augmented,
                               const std::vector<TrajectorySegment>& segs) {
  const auto& l1 = augmented.labels(Player::kOne);
  const auto& l2 = augmented.labels(Player::kTwo);
  os << "segment_id,c_lo,c_hi,support_p1,support_p2";
  for (const auto& l : l1) os << ",p1_" << l;
  for (const auto& l : l2) os << ",p2_base_" << l;
  for (const auto& l : l2) os << ",p2_slope_" << l;
  os << "\n";
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    os << i << "," << to_string(s.lo) << "," << to_string(s.hi) << ","
       << join_labels(augmented, Player::kOne, s.support.s1) << ","
       << join_labels(augmented, Player::kTwo, s.support.s2);
    for (const auto& w : s.p1.weights()) os << "," << to_string(w);
    for (const auto& w : s.p2_base) os << "," << to_string(w);
    for (const auto& w : s.p2_slope) os << "," << to_string(w);
    os << "\n";
  }
}

inline void write_samples_csv(std::ostream& os, const CostSweep& sweep,
                              const std::vector<TrajectorySegment>& segs,
                              std::size_t samples) {
  Game aug0 = sweep.augmented_at(0);
  os << "segment_id,c";
  for (const auto& l : aug0.labels(Player::kOne)) os << ",pi1_" << l;
  for (const auto& l : aug0.labels(Player::kTwo)) os << ",pi2_" << l;
  os << ",u1,u2\n";
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    for (std::size_t k = 0; k < samples; ++k) {
      Rational c = samples == 1 ? (s.lo + s.hi) / 2
                                : s.lo + (s.hi - s.lo) * Rational(static_cast<long>(k)) /
                                             Rational(static_cast<long>(samples - 1));
      Profile pr = s.at(c);
      auto [u1, u2] = expected_utility(sweep.augmented_at(c), pr);
      os << i << "," << format_double(to_double(c));
      for (const auto& w : pr.p1.weights()) os << "," << format_double(to_double(w));
      for (const auto& w : pr.p2.weights()) os << "," << format_double(to_double(w));
      os << "," << format_double(to_double(u1)) << "," << format_double(to_double(u2))
         << "\n";
    }
  }
}

}  // namespace simgame

#endif  // SIMGAME_PARAM_SWEEP_HPP_
