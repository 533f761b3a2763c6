// Copyright 2026 The tugame Authors
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

// Command-line front end. Text output is exact (rationals as p/q); --json
// wraps the same data in a machine-readable envelope.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tugame/game.hpp"
#include "tugame/gamefile.hpp"
#include "tugame/lpkit.hpp"
#include "tugame/prekernel.hpp"
#include "tugame/rgp.hpp"
#include "tugame/stearns.hpp"
#include "tugame/surplus.hpp"

namespace {

using nlohmann::json;
using namespace tugame;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNoConvergence = 3;

int max_players_limit() {
  const char* env = std::getenv("TUGAME_MAX_N");
  if (!env) return 12;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || n < 2 || n > 31) {
    throw std::invalid_argument(std::string("invalid TUGAME_MAX_N: '") + env + "'");
  }
  return static_cast<int>(n);
}

std::string vec_str(const std::vector<Rational>& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += x[i].str();
  }
  return out + ")";
}

std::string coalitions_str(const std::vector<Coalition>& cs) {
  std::string out = "{";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ", ";
    out += cs[i].str();
  }
  return out + "}";
}

json vec_json(const std::vector<Rational>& x) {
  json a = json::array();
  for (const auto& r : x) a.push_back(r.str());
  return a;
}

json mat_json(const Mat& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(vec_json(row));
  return a;
}

json coalition_json(Coalition s) {
  json a = json::array();
  for (int p : s.players()) a.push_back(p);
  return a;
}

json coalitions_json(const std::vector<Coalition>& cs) {
  json a = json::array();
  for (Coalition s : cs) a.push_back(coalition_json(s));
  return a;
}

void print_matrix(std::ostream& os, const std::string& name, const Mat& m) {
  os << name << " =\n";
  for (const auto& row : m) {
    os << "  [";
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
    os << "]\n";
  }
}

struct Command {
  bool json_mode = false;
  json envelope;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void input_game(const std::string& path, const TuGame& v) {
    envelope["input"] = {{"file", path}, {"digest", game_digest(v)}, {"players", v.n()}};
  }
  int finish(int code) {
    if (json_mode) {
      if (!envelope.contains("diagnostics")) envelope["diagnostics"] = json::object();
      const auto dt = std::chrono::steady_clock::now() - t0;
      envelope["timing_ms"] =
          std::chrono::duration_cast<std::chrono::microseconds>(dt).count() / 1000.0;
      envelope["exit_code"] = code;
      std::cout << envelope.dump(2) << "\n";
    }
    return code;
  }
};

Allocation equal_split(const TuGame& v) {
  return Allocation(v.n(), v.value(v.grand()) / Rational(v.n()));
}

void print_selection(std::ostream& os, const TuGame& v, const PairSelection& sel) {
  const auto pairs = pair_order(v.n());
  os << "S = {";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    os << (k ? ", " : "") << sel.chosen()[k].str();
  }
  os << "}\n   pair order: ";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    os << (k ? "," : "") << "(" << pairs[k].first << "," << pairs[k].second << ")";
  }
  os << "\n";
}

json selection_json(const TuGame& v, const PairSelection& sel) {
  const auto pairs = pair_order(v.n());
  json a = json::array();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    a.push_back({{"i", pairs[k].first},
                 {"j", pairs[k].second},
                 {"coalition", coalition_json(sel.chosen()[k])}});
  }
  return a;
}

int cmd_prekernel(Command& cmd, const std::string& path, const std::string& start_csv,
                  bool trace, int max_iter) {
  const TuGame v = parse_game_file(path, max_players_limit());
  cmd.input_game(path, v);
  const Allocation start =
      start_csv.empty() ? equal_split(v) : parse_allocation_csv(start_csv, v.n());

  const SolveTrace st = solve_prekernel(v, start, max_iter);
  const bool converged = st.status == SolveStatus::Converged;

  if (cmd.json_mode) {
    json r;
    r["start"] = vec_json(start);
    r["terminal"] = vec_json(st.terminal);
    r["gamma_steps"] = st.gamma_steps;
    cmd.envelope["diagnostics"] = {
        {"status", converged ? "Converged" : "IterationCapHit"},
        {"exceeded_theory_bound", st.exceeded_theory_bound}};
    if (trace) {
      json its = json::array();
      for (const auto& it : st.iterations) {
        its.push_back({{"x", vec_json(it.x)},
                       {"selection", selection_json(v, it.selection)},
                       {"E", mat_json(it.system.e)},
                       {"alpha", vec_json(it.system.alpha)},
                       {"Q", mat_json(it.system.q)},
                       {"a", vec_json(it.system.a)}});
      }
      r["iterations"] = std::move(its);
    }
    cmd.envelope["result"] = std::move(r);
  } else {
    if (trace) {
      for (std::size_t k = 0; k < st.iterations.size(); ++k) {
        const auto& it = st.iterations[k];
        std::cout << "-- iteration " << k << " --\n";
        std::cout << "x = " << vec_str(it.x) << "\n";
        print_selection(std::cout, v, it.selection);
        print_matrix(std::cout, "E", it.system.e);
        std::cout << "alpha = " << vec_str(it.system.alpha) << "\n";
        print_matrix(std::cout, "Q", it.system.q);
        std::cout << "a = " << vec_str(it.system.a) << "\n";
      }
    }
    std::cout << "pre-kernel element: " << vec_str(st.terminal) << "\n";
    std::cout << "gamma steps: " << st.gamma_steps << "\n";
    std::cout << "status: " << (converged ? "Converged" : "IterationCapHit") << "\n";
    if (st.exceeded_theory_bound) {
      std::cout << "note: exceeded the C(n,2)-1 step bound\n";
    }
  }
  return cmd.finish(converged ? kExitOk : kExitNoConvergence);
}

int cmd_prenucleolus(Command& cmd, const std::string& path, const std::string& method) {
  const TuGame v = parse_game_file(path, max_players_limit());
  cmd.input_game(path, v);
  json r;
  int code = kExitOk;

  std::optional<Allocation> conj;
  if (method == "conjugation" || method == "both") {
    const SolveTrace st = solve_prekernel(v, equal_split(v));
    if (st.status != SolveStatus::Converged) {
      code = kExitNoConvergence;
      cmd.envelope["diagnostics"] = {{"conjugation_status", "IterationCapHit"}};
      if (!cmd.json_mode) std::cout << "conjugation: did not converge\n";
    } else {
      conj = st.terminal;
      r["conjugation"] = {{"x", vec_json(st.terminal)}, {"gamma_steps", st.gamma_steps}};
      if (!cmd.json_mode) {
        std::cout << "conjugation:  " << vec_str(st.terminal)
                  << "  (" << st.gamma_steps << " gamma steps)\n";
      }
    }
  }
  std::optional<Allocation> oracle;
  if (method == "lp-oracle" || method == "both") {
    oracle = prenucleolus_lp_oracle(v);
    r["lp_oracle"] = {{"x", vec_json(*oracle)}};
    if (!cmd.json_mode) std::cout << "lp-oracle:    " << vec_str(*oracle) << "\n";
  }
  if (method == "both" && code == kExitOk) {
    const bool match = conj && oracle && *conj == *oracle;
    r["cross_check"] = match ? "PASS" : "DISCREPANCY";
    if (!cmd.json_mode) {
      std::cout << "cross-check: " << (match ? "PASS" : "DISCREPANCY") << "\n";
      if (!match) {
        std::cout << "note: conjugation found a pre-kernel element; for games with a\n"
                     "multi-valued pre-kernel it may differ from the pre-nucleolus\n";
      }
    }
  }
  cmd.envelope["result"] = std::move(r);
  return cmd.finish(code);
}

int cmd_oracle(Command& cmd, const std::string& path) {
  const TuGame v = parse_game_file(path, max_players_limit());
  cmd.input_game(path, v);
  const Allocation x = prenucleolus_lp_oracle(v);
  cmd.envelope["result"] = {{"x", vec_json(x)}};
  if (!cmd.json_mode) std::cout << "pre-nucleolus: " << vec_str(x) << "\n";
  return cmd.finish(kExitOk);
}

int cmd_stearns(Command& cmd, const std::string& path, const std::string& start_csv,
                const std::string& tol_str, long max_steps) {
  const TuGame v = parse_game_file(path, max_players_limit());
  cmd.input_game(path, v);
  const Allocation start = parse_allocation_csv(start_csv, v.n());
  const Rational tol = Rational::from_string(tol_str);

  const TransferTrace tr = stearns_solve(v, start, tol, max_steps);
  const bool converged = tr.status == TransferStatus::Converged;
  cmd.envelope["result"] = {{"terminal", vec_json(tr.terminal)},
                            {"steps", tr.steps.size()},
                            {"relative_gap", tr.relative_gap.str()}};
  cmd.envelope["diagnostics"] = {{"status", converged ? "Converged" : "StepCapHit"}};
  if (!cmd.json_mode) {
    std::cout << "terminal: " << vec_str(tr.terminal) << "\n";
    std::cout << "transfers: " << tr.steps.size() << "\n";
    std::cout << "relative gap: " << tr.relative_gap << "\n";
    std::cout << "status: " << (converged ? "Converged" : "StepCapHit") << "\n";
  }
  return cmd.finish(converged ? kExitOk : kExitNoConvergence);
}

int cmd_leastcore(Command& cmd, const std::string& path, bool vertices) {
  const TuGame v = parse_game_file(path, max_players_limit());
  cmd.input_game(path, v);
  const LeastCoreResult lc = least_core(v);
  json r;
  r["epsilon"] = lc.epsilon.str();
  r["witness"] = vec_json(lc.witness);
  r["tight"] = coalitions_json(lc.tight);
  r["universally_tight"] = coalitions_json(lc.universally_tight);
  if (!cmd.json_mode) {
    std::cout << "epsilon: " << lc.epsilon << "\n";
    std::cout << "witness: " << vec_str(lc.witness) << "\n";
    std::cout << "tight at witness: " << coalitions_str(lc.tight) << "\n";
    std::cout << "universally tight: " << coalitions_str(lc.universally_tight) << "\n";
  }
  if (vertices) {
    const auto verts = least_core_vertices(v);
    json vj = json::array();
    for (const auto& vert : verts) vj.push_back(vec_json(vert));
    r["vertices"] = std::move(vj);
    if (!cmd.json_mode) {
      std::cout << "vertices:\n";
      for (const auto& vert : verts) std::cout << "  " << vec_str(vert) << "\n";
    }
  }
  cmd.envelope["result"] = std::move(r);
  return cmd.finish(kExitOk);
}

int cmd_core(Command& cmd, const std::string& path, const std::string& check_csv) {
  const TuGame v = parse_game_file(path, max_players_limit());
  cmd.input_game(path, v);
  json r;
  if (!check_csv.empty()) {
    const Allocation x = parse_allocation_csv(check_csv, v.n());
    const bool in = core_contains(v, x);
    r["allocation"] = vec_json(x);
    r["in_core"] = in;
    if (!cmd.json_mode) {
      std::cout << vec_str(x) << (in ? " is" : " is not") << " in the core\n";
    }
  } else {
    const LeastCoreResult lc = least_core(v);
    const bool nonempty = lc.epsilon.sign() <= 0;
    r["nonempty"] = nonempty;
    r["epsilon"] = lc.epsilon.str();
    if (!cmd.json_mode) {
      std::cout << "core: " << (nonempty ? "nonempty" : "empty")
                << " (least-core epsilon " << lc.epsilon << ")\n";
    }
  }
  cmd.envelope["result"] = std::move(r);
  return cmd.finish(kExitOk);
}

int cmd_props(Command& cmd, const std::string& path) {
  const TuGame v = parse_game_file(path, max_players_limit());
  cmd.input_game(path, v);
  const bool mono = is_monotone(v);
  const bool super = is_superadditive(v);
  const bool convex = is_convex(v);
  const bool zmono = is_zero_monotone(v);
  const std::vector<int> veto = veto_players(v);
  cmd.envelope["result"] = {{"monotone", mono},
                            {"superadditive", super},
                            {"convex", convex},
                            {"zero_monotone", zmono},
                            {"veto_players", veto}};
  if (!cmd.json_mode) {
    std::cout << "monotone:      " << (mono ? "yes" : "no") << "\n";
    std::cout << "superadditive: " << (super ? "yes" : "no") << "\n";
    std::cout << "convex:        " << (convex ? "yes" : "no") << "\n";
    std::cout << "zero-monotone: " << (zmono ? "yes" : "no") << "\n";
    std::cout << "veto players:  {";
    for (std::size_t i = 0; i < veto.size(); ++i) std::cout << (i ? "," : "") << veto[i];
    std::cout << "}\n";
  }
  return cmd.finish(kExitOk);
}

int cmd_shapley(Command& cmd, const std::string& path) {
  const TuGame v = parse_game_file(path, max_players_limit());
  cmd.input_game(path, v);
  const Allocation phi = shapley_value(v);
  cmd.envelope["result"] = {{"shapley", vec_json(phi)}};
  if (!cmd.json_mode) std::cout << "Shapley value: " << vec_str(phi) << "\n";
  return cmd.finish(kExitOk);
}

int cmd_balanced(Command& cmd, int n, const std::vector<std::string>& tokens) {
  if (n < 2 || n > max_players_limit()) {
    throw std::invalid_argument("player count out of range");
  }
  std::vector<Coalition> cs;
  for (const auto& t : tokens) cs.push_back(parse_coalition_token(t, n));
  cmd.envelope["input"] = {{"players", n}, {"collection", coalitions_json(cs)}};
  const BalancedResult b = is_balanced_collection(n, cs);
  json r;
  r["balanced"] = b.balanced;
  if (b.balanced) r["weights"] = vec_json(b.weights);
  if (!cmd.json_mode) {
    std::cout << "balanced: " << (b.balanced ? "yes" : "no") << "\n";
    if (b.balanced) {
      for (std::size_t i = 0; i < cs.size(); ++i) {
        std::cout << "  lambda" << cs[i].str() << " = " << b.weights[i] << "\n";
      }
    }
  }
  cmd.envelope["result"] = std::move(r);
  return cmd.finish(kExitOk);
}

const char* verdict_str(RgpVerdict v) {
  switch (v) {
    case RgpVerdict::MatchesNucleolus: return "MatchesNucleolus";
    case RgpVerdict::SelectionAmbiguous: return "SelectionAmbiguous";
    case RgpVerdict::Mismatch: return "Mismatch";
  }
  return "?";
}

int cmd_rgp_audit(Command& cmd, const std::string& path, const std::string& supply_csv) {
  const TuGame v = parse_game_file(path, max_players_limit());
  cmd.input_game(path, v);
  std::optional<Allocation> supplied;
  if (!supply_csv.empty()) supplied = parse_allocation_csv(supply_csv, v.n());

  const RgpRun run = run_rgp_procedure(v, supplied);
  json r;
  r["per_player"] = vec_json(run.per_player);
  r["verdict"] = verdict_str(run.verdict);
  json flags = json::array();
  for (const auto& f : run.flags) {
    flags.push_back({{"player", f.player},
                     {"level", f.level},
                     {"chosen", coalition_json(f.chosen)},
                     {"alternatives", coalitions_json(f.alternatives)},
                     {"ambiguous", f.ambiguous}});
  }
  cmd.envelope["diagnostics"] = {{"convex_input", run.convex_input},
                                 {"ambiguity_flags", std::move(flags)}};
  if (run.witness_outputs) {
    r["witness"] = {{"per_player_a", vec_json(run.witness_outputs->first)},
                    {"per_player_b", vec_json(run.witness_outputs->second)}};
    if (run.witness_inputs) {
      r["witness"]["vertex_a"] = vec_json(run.witness_inputs->first);
      r["witness"]["vertex_b"] = vec_json(run.witness_inputs->second);
    }
  }
  if (!cmd.json_mode) {
    if (!run.convex_input) {
      std::cout << "warning: game is not convex; the audited procedure presumes convexity\n";
    }
    std::cout << "per-player values: " << vec_str(run.per_player) << "\n";
    for (const auto& f : run.flags) {
      std::cout << "ambiguity: player " << f.player << " level " << f.level
                << " chose " << f.chosen.str() << " with a non-point least-core\n";
    }
    if (run.witness_outputs) {
      if (run.witness_inputs) {
        std::cout << "witness vertices: " << vec_str(run.witness_inputs->first)
                  << " and " << vec_str(run.witness_inputs->second) << "\n";
      }
      std::cout << "witness outcomes: " << vec_str(run.witness_outputs->first)
                << " vs " << vec_str(run.witness_outputs->second) << "\n";
    }
    std::cout << "verdict: " << verdict_str(run.verdict) << "\n";
  }
  cmd.envelope["result"] = std::move(r);
  return cmd.finish(kExitOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for transferable-utility cooperative games"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit a machine-readable JSON envelope");

  std::string game_path, start_csv, tol_str, method = "both", check_csv, supply_csv;
  bool trace = false, vertices = false;
  int max_iter = 0, balanced_n = 0;
  long max_steps = 100000;
  std::vector<std::string> coalition_tokens;

  auto* pk = app.add_subcommand("prekernel", "pre-kernel element via conjugation iteration");
  pk->add_option("game", game_path)->required();
  pk->add_option("--start", start_csv, "start vector x1,x2,... (default: equal split)");
  pk->add_flag("--trace", trace, "print every iteration's S, E, alpha, Q, a, x");
  pk->add_option("--max-iter", max_iter, "gamma step cap (default C(n,2)+n)");

  auto* pn = app.add_subcommand("prenucleolus", "pre-nucleolus (single-valued pre-kernel classes)");
  pn->add_option("game", game_path)->required();
  pn->add_option("--method", method)
      ->check(CLI::IsMember({"conjugation", "lp-oracle", "both"}));

  auto* orc = app.add_subcommand("oracle", "sequential-LP pre-nucleolus only");
  orc->add_option("game", game_path)->required();

  auto* stc = app.add_subcommand("stearns", "bilateral transfer scheme");
  stc->add_option("game", game_path)->required();
  stc->add_option("--start", start_csv)->required();
  stc->add_option("--tol", tol_str, "relative tolerance as a rational p/q")->required();
  stc->add_option("--max-steps", max_steps);

  auto* lc = app.add_subcommand("leastcore", "least-core value, witness, tight sets");
  lc->add_option("game", game_path)->required();
  lc->add_flag("--vertices", vertices, "enumerate least-core vertices (n <= 6)");

  auto* co = app.add_subcommand("core", "core non-emptiness or membership");
  co->add_option("game", game_path)->required();
  co->add_option("--check", check_csv, "allocation x1,x2,... to test for membership");

  auto* pr = app.add_subcommand("props", "monotone/superadditive/convex/zero-monotone/veto");
  pr->add_option("game", game_path)->required();

  auto* sh = app.add_subcommand("shapley", "Shapley value");
  sh->add_option("game", game_path)->required();

  auto* ba = app.add_subcommand("balanced", "balancedness of a coalition collection");
  ba->add_option("n", balanced_n, "player count")->required();
  ba->add_option("coalitions", coalition_tokens, "coalitions as member lists or m:<mask>")
      ->required();

  auto* rg = app.add_subcommand("rgp-audit", "audit the reduced-game nucleolus procedure");
  rg->add_option("game", game_path)->required();
  rg->add_option("--supply", supply_csv, "allocation pinning removed players' payoffs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Command cmd;
  cmd.json_mode = json_mode;
  cmd.envelope["command"] = app.get_subcommands().front()->get_name();

  try {
    if (pk->parsed()) return cmd_prekernel(cmd, game_path, start_csv, trace, max_iter);
    if (pn->parsed()) return cmd_prenucleolus(cmd, game_path, method);
    if (orc->parsed()) return cmd_oracle(cmd, game_path);
    if (stc->parsed()) return cmd_stearns(cmd, game_path, start_csv, tol_str, max_steps);
    if (lc->parsed()) return cmd_leastcore(cmd, game_path, vertices);
    if (co->parsed()) return cmd_core(cmd, game_path, check_csv);
    if (pr->parsed()) return cmd_props(cmd, game_path);
    if (sh->parsed()) return cmd_shapley(cmd, game_path);
    if (ba->parsed()) return cmd_balanced(cmd, balanced_n, coalition_tokens);
    if (rg->parsed()) return cmd_rgp_audit(cmd, game_path, supply_csv);
  } catch (const GameFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
