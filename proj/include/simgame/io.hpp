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
#ifndef SIMGAME_IO_HPP_
#define SIMGAME_IO_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "simgame/errors.hpp"
#include "simgame/game.hpp"
#include "simgame/generic_fast.hpp"
#include "simgame/ne_enum.hpp"
#include "simgame/rational.hpp"
#include "simgame/sim_build.hpp"
#include "simgame/voi.hpp"
#include "simgame/welfare.hpp"

namespace simgame {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational payoff_from_json(const Json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(Integer(v.get<std::uint64_t>()))
                                  : Rational(Integer(v.get<std::int64_t>()));
  }
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_float()) {
    throw ParseError(where + ": floating-point payoff " + v.dump() +
                     " (use an integer or a \"p/q\" string)");
  }
  throw ParseError(where + ": payoff must be an integer or a \"p/q\" string");
}

inline std::vector<std::string> labels_from_json(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParseError(std::string("missing array \"") + key + "\"");
  }
  std::vector<std::string> out;
  for (const auto& v : doc[key]) {
    if (!v.is_string()) throw ParseError(std::string(key) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline Matrix<Rational> matrix_from_json(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParseError(std::string("missing matrix \"") + key + "\"");
  }
  const Json& m = doc[key];
  std::size_t cols = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_array()) throw ParseError(std::string(key) + " rows must be arrays");
    if (i == 0) cols = m[i].size();
    if (m[i].size() != cols) {
      throw ParseError(std::string(key) + " is ragged: row 0 has " + std::to_string(cols) +
                       " entries, row " + std::to_string(i) + " has " +
                       std::to_string(m[i].size()));
    }
  }
  Matrix<Rational> out(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out(i, j) = payoff_from_json(m[i][j], std::string(key) + "[" + std::to_string(i) +
                                                "][" + std::to_string(j) + "]");
    }
  }
  return out;
}

}  // namespace detail

inline Json rational_json(const Rational& r) { return to_string(r); }

inline Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

// Integers that fit in 64 bits are written as JSON numbers, others as "p/q".
inline Json payoff_json(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    const Integer& n = boost::multiprecision::numerator(r);
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max()) {
      return n.convert_to<std::int64_t>();
    }
  }
  return to_string(r);
}

inline Game game_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("game document must be a JSON object");
  auto l1 = detail::labels_from_json(doc, "p1_actions");
  auto l2 = detail::labels_from_json(doc, "p2_actions");
  auto u1 = detail::matrix_from_json(doc, "u1");
  auto u2 = detail::matrix_from_json(doc, "u2");
  return Game(std::move(l1), std::move(l2), std::move(u1), std::move(u2));
}

inline Game parse_game(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return game_from_json(doc);
}

inline Json game_json(const Game& g) {
  Json doc;
  doc["p1_actions"] = g.labels(Player::kOne);
  doc["p2_actions"] = g.labels(Player::kTwo);
  for (Player p : {Player::kOne, Player::kTwo}) {
    Json m = Json::array();
    for (std::size_t a = 0; a < g.n1(); ++a) {
      Json row = Json::array();
      for (std::size_t b = 0; b < g.n2(); ++b) row.push_back(payoff_json(g.u(p, a, b)));
      m.push_back(row);
    }
    doc[p == Player::kOne ? "u1" : "u2"] = m;
  }
  return doc;
}

inline std::string serialize_game(const Game& g) { return game_json(g).dump(2) + "\n"; }

inline Json labels_json(const Game& g, Player p, const ActionSet& s) {
  Json out = Json::array();
  for (auto i : s) out.push_back(g.labels(p)[i]);
  return out;
}

inline Json profile_json(const Game& g, const Profile& pr) {
  auto [u1, u2] = expected_utility(g, pr);
  return Json{{"p1", vector_json(pr.p1.weights())},
              {"p2", vector_json(pr.p2.weights())},
              {"u1", to_string(u1)},
              {"u2", to_string(u2)}};
}

inline Json component_json(const Game& g, const NEComponent& comp) {
  Json c;
  c["support_p1"] = labels_json(g, Player::kOne, comp.support.s1);
  c["support_p2"] = labels_json(g, Player::kTwo, comp.support.s2);
  Json v1 = Json::array(), v2 = Json::array(), vp = Json::array();
  for (const auto& x : comp.p1_vertices) v1.push_back(vector_json(x.weights()));
  for (const auto& y : comp.p2_vertices) v2.push_back(vector_json(y.weights()));
  for (const auto& pr : vertex_profiles(comp)) vp.push_back(profile_json(g, pr));
  c["p1_vertices"] = v1;
  c["p2_vertices"] = v2;
  c["vertex_profiles"] = vp;
  return c;
}

inline Json components_json(const Game& g, const std::vector<NEComponent>& comps) {
  Json out = Json::array();
  for (const auto& c : comps) out.push_back(component_json(g, c));
  return out;
}

inline Json policy_json(const Game& base, const BestResponsePolicy& p) {
  Json out = Json::object();
  for (std::size_t b = 0; b < base.n2(); ++b) {
    out[base.labels(Player::kTwo)[b]] = vector_json(p.response[b].weights());
  }
  return out;
}

inline Json voi_json(const Game& g, const VoiReport& r) {
  return Json{{"p2_actions", g.labels(Player::kTwo)},
              {"pi2", vector_json(r.strategy.weights())},
              {"best_response_value", to_string(r.best_response_value)},
              {"clairvoyant_value", to_string(r.clairvoyant_value)},
              {"voi", to_string(r.voi)}};
}

inline Json range_json(const Range& r) {
  return Json::array({to_string(r.first), to_string(r.second)});
}

inline Json classification_json(const Game& g, const ClassificationReport& r) {
  Json co = Json::array();
  for (auto [a, b] : r.commitment_outcomes) {
    co.push_back(Json{{"p1", g.labels(Player::kOne)[a]},
                      {"p2", g.labels(Player::kTwo)[b]},
                      {"u1", to_string(g.u1(a, b))},
                      {"u2", to_string(g.u2(a, b))}});
  }
  return Json{{"is_zero_sum", r.is_zero_sum},
              {"is_generic", r.is_generic},
              {"genericity_violations", r.genericity_violations},
              {"has_br_tiebreaking", r.has_br_tiebreaking},
              {"is_generalized_trust_game", r.is_generalized_trust_game},
              {"upper_threshold", to_string(r.upper_threshold)},
              {"p2_commitment_outcomes", co}};
}

inline Json welfare_json(const Game& g, const BestResponsePolicy& policy,
                         const WelfareReport& r) {
  Json grid = Json::array();
  for (const auto& gp : r.grid) {
    Game aug = build(g, gp.c, policy).augmented;
    Json comps = Json::array();
    for (const auto& cw : gp.components) {
      Json c = component_json(aug, cw.component);
      c["simulates"] = cw.simulates;
      c["u1_range"] = range_json(cw.u1_range);
      c["u2_range"] = range_json(cw.u2_range);
      c["verdict"] = cw.verdict;
      comps.push_back(c);
    }
    grid.push_back(Json{{"c", to_string(gp.c)}, {"components", comps}});
  }
  return Json{{"base_u1_range", range_json(r.base_u1)},
              {"base_u2_range", range_json(r.base_u2)},
              {"grid", grid}};
}

inline Json construction_json(const Game& g, const Rational& c, const TrustConstruction& t) {
  Game aug = build(g, c, default_policy(g)).augmented;
  Json cands = Json::array();
  for (const auto& k : t.candidates) {
    Json j{{"p", to_string(k.p)}, {"alpha", to_string(k.alpha)}, {"verified", k.verified}};
    if (t.construction_case == 'B') {
      j["rho_p1"] = vector_json(k.rho.p1.weights());
      j["rho_p2"] = vector_json(k.rho.p2.weights());
      j["eta"] = to_string(k.eta);
    }
    if (!k.failure.empty()) j["failure"] = k.failure;
    cands.push_back(j);
  }
  Json out{{"c", to_string(c)},
           {"case", std::string(1, t.construction_case)},
           {"optimal_commitments", labels_json(g, Player::kTwo, t.optimal_commitments)},
           {"unique_responses", labels_json(g, Player::kOne, t.unique_responses)},
           {"v2", to_string(t.v2)}};
  if (t.auxiliary) out["auxiliary_game"] = game_json(*t.auxiliary);
  out["candidates"] = cands;
  out["p1_actions"] = aug.labels(Player::kOne);
  out["p2_actions"] = aug.labels(Player::kTwo);
  out["equilibrium"] = profile_json(aug, t.equilibrium);
  return out;
}

// Comma-separated rationals, e.g. "0,5,150/7".
inline RationalVector parse_rational_list(const std::string& text) {
  RationalVector out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    out.push_back(parse_rational(first == std::string::npos ? ""
                                                            : item.substr(first, last - first + 1)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace simgame

#endif  // SIMGAME_IO_HPP_
