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
#ifndef SIMGAME_CLI_HPP_
#define SIMGAME_CLI_HPP_

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "simgame/analysis.hpp"
#include "simgame/corpus.hpp"
#include "simgame/errors.hpp"
#include "simgame/generic_fast.hpp"
#include "simgame/io.hpp"
#include "simgame/ne_enum.hpp"
#include "simgame/param_sweep.hpp"
#include "simgame/sim_build.hpp"
#include "simgame/voi.hpp"
#include "simgame/welfare.hpp"

namespace simgame::cli {

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

inline void log_line(std::ostream& err, const std::string& level, const std::string& code,
                     const std::string& msg) {
  err << "level=" << level << " code=" << code << " msg=" << quote(msg) << "\n";
}

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("io", "cannot read " + path, 1);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

// "lex" selects the lowest-index best response; otherwise a comma-separated
// list of P1 labels, one per P2 action.
inline BestResponsePolicy parse_policy(const Game& g, const std::string& text) {
  if (text == "lex") return default_policy(g);
  BestResponsePolicy p;
  std::stringstream ss(text);
  std::string label;
  while (std::getline(ss, label, ',')) {
    auto a = g.find_action(Player::kOne, label);
    if (!a) throw ParseError("policy names unknown P1 action " + label);
    p.response.push_back(MixedStrategy::pure(Player::kOne, g.n1(), *a));
  }
  try {
    validate_policy(g, p);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("--policy: ") + e.what());
  }
  return p;
}

inline Json triplet_json(const Game& g, const TripletCandidate& t) {
  return Json{{"a", g.labels(Player::kOne)[t.baseline_a]},
              {"b", g.labels(Player::kTwo)[t.baseline_b]},
              {"d", g.labels(Player::kTwo)[t.deviation_d]},
              {"class", to_string(t.cls)},
              {"ratio", to_string(t.ratio)},
              {"p_threshold", to_string(t.p_threshold)},
              {"alpha", to_string(t.alpha)}};
}

struct Options {
  std::string input = "-";
  std::string family;
  std::string c;
  std::string policy = "lex";
  std::string out_dir;
  std::string pi2;
  std::string grid;
  std::string coop = "25", defect_gain = "150", defect_loss = "150";
  std::string x, y;
  std::size_t n = 3;
  std::string k = "26";
  std::size_t samples = 64;
  bool fast = false;
  bool all_policies = false;
  bool explicit_form = false;
  bool predictions = false;
};

inline int cmd_gen(const Options& o, std::ostream& out) {
  Json doc;
  if (o.family == "trust") {
    doc = game_json(gen_trust(parse_rational(o.coop), parse_rational(o.defect_gain),
                              parse_rational(o.defect_loss)));
  } else if (o.family == "cafes") {
    if (o.x.empty() || o.y.empty()) throw ParseError("cafes needs --x and --y");
    auto inst = gen_cafes(parse_rational_list(o.x), parse_rational_list(o.y));
    doc = game_json(inst.game);
    if (o.predictions) {
      Json preds = Json::array();
      for (const auto& p : inst.predictions) {
        preds.push_back(Json{{"subset", labels_json(inst.game, Player::kOne, p.subset)},
                             {"voi", to_string(p.voi)},
                             {"pi1", vector_json(p.profile.p1.weights())},
                             {"pi2", vector_json(p.profile.p2.weights())}});
      }
      doc = Json{{"game", doc}, {"predictions", preds}};
    }
  } else if (o.family == "guess") {
    doc = game_json(gen_guess_number(o.n));
  } else {
    Integer k;
    if (!detail::parse_integer(o.k, &k)) throw ParseError("--k must be an integer");
    doc = game_json(gen_named(o.family, k, o.explicit_form));
  }
  out << doc.dump(2) << "\n";
  return 0;
}

inline int cmd_solve(const Options& o, const Game& g, std::ostream& out) {
  Rational c = parse_rational(o.c);
  if (o.all_policies) {
    auto r = solve_all_policies(g, c, [](const Game& h) { return all_nash_equilibria(h); });
    Json pols = Json::array();
    for (const auto& p : r.policies) {
      Game aug = build(g, c, p.policy, p.label).augmented;
      pols.push_back(Json{{"label", p.label},
                          {"policy", policy_json(g, p.policy)},
                          {"new_components", components_json(aug, p.new_components)}});
    }
    Json dup = Json::array(), shared = Json::array();
    for (auto [i, j] : r.duplicates) dup.push_back({i, j});
    for (auto [i, j] : r.shared_new) shared.push_back({i, j});
    out << Json{{"c", to_string(c)},
                {"base_components", components_json(g, r.base_components)},
                {"policies", pols},
                {"duplicate_policies", dup},
                {"shared_new_equilibria", shared}}
               .dump(2)
        << "\n";
    return 0;
  }
  auto policy = parse_policy(g, o.policy);
  Game aug = build(g, c, policy).augmented;
  Json doc{{"c", to_string(c)},
           {"method", o.fast ? "fast" : "enumeration"},
           {"policy", policy_json(g, policy)},
           {"p1_actions", aug.labels(Player::kOne)},
           {"p2_actions", aug.labels(Player::kTwo)}};
  if (o.fast) {
    if (o.policy != "lex") throw ParseError("--fast uses the unique best responses; drop --policy");
    FastResult r;
    Json trip = Json::array();
    try {
      for (const auto& t : suitable_triplets(g)) trip.push_back(triplet_json(g, t));
      r = fast_cheap_ne(g, c);
    } catch (const NotGeneric& e) {
      throw NotGeneric(std::string(e.what()) + "; rerun without --fast to enumerate");
    }
    doc["triplets"] = trip;
    doc["components"] = components_json(aug, r.equilibria);
    doc["diagnostics"] = r.diagnostics;
  } else {
    doc["components"] = components_json(aug, all_nash_equilibria(aug));
  }
  out << doc.dump(2) << "\n";
  return 0;
}

inline int cmd_sweep(const Options& o, const Game& g, std::ostream& out, std::ostream& err) {
  if (o.samples < 1) throw ParseError("--samples must be at least 1");
  CostSweep sweep(g, parse_policy(g, o.policy));
  const auto& bs = sweep.breakpoints();
  auto segs = sweep.all_trajectories();
  std::filesystem::path dir(o.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("io", "cannot create " + o.out_dir + ": " + ec.message(), 1);
  auto open = [&](const char* name) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) throw Error("io", "cannot write " + (dir / name).string(), 1);
    return f;
  };
  {
    auto f = open("breakpoints.csv");
    write_breakpoints_csv(f, bs);
  }
  {
    auto f = open("segments.csv");
    write_segments_csv(f, sweep.augmented_at(0), segs.segments);
  }
  {
    auto f = open("samples.csv");
    write_samples_csv(f, sweep, segs.segments, o.samples);
  }
  for (const auto& d : segs.diagnostics) log_line(err, "warn", "segment_check", d);
  Json bp = Json::array(), dropped = Json::array();
  for (const auto& v : bs.values) bp.push_back(to_string(v));
  for (const auto& d : sweep.dropped()) {
    dropped.push_back(Json{{"c", to_string(d.c)}, {"reason", d.reason}});
  }
  out << Json{{"breakpoints", bp},
              {"sweep_end", to_string(sweep.sweep_end())},
              {"segments", segs.segments.size()},
              {"dropped_candidates", dropped},
              {"diagnostics", segs.diagnostics}}
             .dump(2)
      << "\n";
  return 0;
}

// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Equilibria of two-player games with a costly simulation action", "simgame"};
  app.require_subcommand(1);
  Options o;
  auto* gen = app.add_subcommand("gen", "Write a named game as JSON");
  gen->add_option("family", o.family,
                  "trust|cafes|guess|joint_project|commitment|battle_of_sexes|chicken|stag_hunt")
      ->required();
  gen->add_option("--coop", o.coop, "trust: cooperation payoff");
  gen->add_option("--defect-gain", o.defect_gain, "trust: P2 gain from defecting");
  gen->add_option("--defect-loss", o.defect_loss, "trust: P1 loss when P2 defects");
  gen->add_option("--x", o.x, "cafes: P1 diagonal payoffs, comma separated");
  gen->add_option("--y", o.y, "cafes: P2 diagonal payoffs, comma separated");
  gen->add_flag("--predictions", o.predictions, "cafes: include predicted VoI values");
  gen->add_option("--n", o.n, "guess: number range");
  gen->add_option("--k", o.k, "joint_project: password space size");
  gen->add_flag("--explicit", o.explicit_form, "joint_project: one action per password");

  auto* solve = app.add_subcommand("solve", "Equilibria of the simulation game at cost c");
  solve->add_option("game", o.input, "game JSON, - for stdin")->required();
  solve->add_option("--c", o.c, "simulation cost p/q")->required();
  solve->add_flag("--fast", o.fast, "linear-time algorithm for generic games");
  solve->add_option("--policy", o.policy, "lex or P1 labels per P2 action");
  solve->add_flag("--all-policies", o.all_policies, "solve under every pure policy");

  auto* sweep = app.add_subcommand("sweep", "Breakpoints and trajectories over c");
  sweep->add_option("game", o.input, "game JSON, - for stdin")->required();
  sweep->add_option("--out", o.out_dir, "output directory")->required();
  sweep->add_option("--samples", o.samples, "samples per segment");
  sweep->add_option("--policy", o.policy, "lex or P1 labels per P2 action");

  auto* voi = app.add_subcommand("voi", "Value of information against a P2 strategy");
  voi->add_option("game", o.input, "game JSON, - for stdin")->required();
  voi->add_option("--pi2", o.pi2, "P2 weights p/q, comma separated")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Game classification flags");
  classify_cmd->add_option("game", o.input, "game JSON, - for stdin")->required();

  auto* welfare = app.add_subcommand("welfare", "Welfare against the base game over costs");
  welfare->add_option("game", o.input, "game JSON, - for stdin")->required();
  welfare->add_option("--grid", o.grid, "costs p/q, comma separated")->required();
  welfare->add_option("--policy", o.policy, "lex or P1 labels per P2 action");

  auto* trust = app.add_subcommand("trust-construct", "Constructed simulation equilibrium");
  trust->add_option("game", o.input, "game JSON, - for stdin")->required();
  trust->add_option("--c", o.c, "simulation cost p/q")->required();

  std::vector<const char*> argv{"simgame"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    log_line(err, "error", "usage", e.what());
    return 1;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    Game g = parse_game(read_input(o.input, in));
    if (solve->parsed()) return cmd_solve(o, g, out);
    if (sweep->parsed()) return cmd_sweep(o, g, out, err);
    if (voi->parsed()) {
      RationalVector w = parse_rational_list(o.pi2);
      if (w.size() != g.n2()) throw ParseError("--pi2 needs one weight per P2 action");
      MixedStrategy pi2(Player::kTwo, w);
      out << voi_json(g, voi_of(g, pi2)).dump(2) << "\n";
      return 0;
    }
    if (classify_cmd->parsed()) {
      out << classification_json(g, classify(g)).dump(2) << "\n";
      return 0;
    }
    if (welfare->parsed()) {
      auto policy = parse_policy(g, o.policy);
      auto r = welfare_report(g, policy, parse_rational_list(o.grid));
      out << welfare_json(g, policy, r).dump(2) << "\n";
      return 0;
    }
    if (trust->parsed()) {
      Rational c = parse_rational(o.c);
      out << construction_json(g, c, construct_trust_sim_ne(g, c)).dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    log_line(err, "error", e.code(), e.what());
    return e.exit_code();
  } catch (const std::exception& e) {
    log_line(err, "error", "internal", e.what());
    return 2;
  }
  return 1;
}

}  // namespace simgame::cli

#endif  // SIMGAME_CLI_HPP_
