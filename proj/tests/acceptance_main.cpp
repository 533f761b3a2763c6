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

// Acceptance suite: one pass/fail line per criterion, exact tolerances,
// wall-clock budgets enforced where stated. Exit code is the failure count.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tugame/game.hpp"
#include "tugame/lpkit.hpp"
#include "tugame/prekernel.hpp"
#include "tugame/rgp.hpp"
#include "tugame/stearns.hpp"
#include "tugame/surplus.hpp"

#include "support/fixtures.hpp"

using namespace tugame;
using namespace tugame::testing;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << (why.str().empty() ? "" : "; ") << what;
    }
  }
};

double run_timed(const std::function<void(Check&)>& body, Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  body(c);
  const auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration_cast<std::chrono::microseconds>(dt).count() / 1e6;
}

const Allocation kY0{Rational(10), Rational(0), Rational(0), Rational(0)};

Mat int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  Mat out;
  for (const auto& r : rows) {
    Vec row;
    for (long x : r) row.push_back(Rational(x));
    out.push_back(std::move(row));
  }
  return out;
}

Vec int_vec(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.push_back(Rational(x));
  return out;
}

// C1: bit-exact reproduction of the worked conjugation trace.
void criterion1(Check& c) {
  const TuGame v = example_game();
  const SolveTrace tr = solve_prekernel(v, kY0);
  c.expect(tr.status == SolveStatus::Converged, "solver did not converge");
  c.expect(tr.gamma_steps == 3, "expected 3 gamma steps");
  if (tr.iterations.size() != 4) {
    c.expect(false, "expected 4 recorded iterations");
    return;
  }

  const std::vector<Coalition> s_y0{
      Coalition::of({1}),       Coalition::of({1, 2, 4}), Coalition::of({1, 2, 3}),
      Coalition::of({2}),       Coalition::of({2, 3}),    Coalition::of({2, 3}),
      Coalition::of({2, 3}),    Coalition::of({2, 3}),    Coalition::of({3}),
      Coalition::of({2, 3, 4}), Coalition::of({4}),       Coalition::of({4})};
  c.expect(tr.iterations[0].selection.chosen() == s_y0, "S(y0) mismatch");

  const ClassSystem& s1 = tr.iterations[0].system;
  c.expect(s1.e == int_matrix({{-1, -1, -1, 0, 0, 0, 1},
                               {1, 0, 0, -1, -1, -1, 1},
                               {1, 1, 0, 1, -1, -1, 1},
                               {0, -1, 1, 0, 1, 1, 1}}),
           "iteration-1 E mismatch");
  c.expect(s1.alpha == int_vec({3, -3, -3, 0, -3, -3, 10}), "iteration-1 alpha mismatch");
  c.expect(s1.q == int_matrix({{4, 0, -1, 1}, {0, 5, 3, -1}, {-1, 3, 6, -2}, {1, -1, -2, 5}}),
           "iteration-1 Q mismatch");
  c.expect(s1.a == int_vec({13, 19, 16, 4}), "iteration-1 a mismatch");

  const Allocation y1{Rational(128, 37), Rational(98, 37), Rational(91, 37),
                      Rational(60, 37)};
  c.expect(tr.iterations[1].x == y1, "y1 mismatch");

  const char* exc_y1[16] = {"0",       "-128/37", "-98/37",  "-115/37",
                            "-91/37",  "-219/37", "-78/37",  "-95/37",
                            "-60/37",  "-188/37", "-158/37", "-64/37",
                            "-151/37", "-279/37", "-138/37", "-7/37"};
  const auto exc = excess_vector(v, y1);
  for (int m = 0; m < 16; ++m) {
    if (exc[m] != Rational::from_string(exc_y1[m])) {
      c.expect(false, "exc(y1) mismatch at mask " + std::to_string(m));
      break;
    }
  }

  const ClassSystem& s2 = tr.iterations[1].system;
  c.expect(s2.alpha == int_vec({3, -3, -6, -6, -3, -3, 10}), "iteration-2 alpha mismatch");
  c.expect(s2.q == int_matrix({{5, 2, -1, 2}, {2, 6, 4, -1}, {-1, 4, 7, -4}, {2, -1, -4, 6}}),
           "iteration-2 Q mismatch");
  c.expect(s2.a == int_vec({22, 31, 16, 7}), "iteration-2 a mismatch");

  const Allocation y2{Rational(329, 127), Rational(423, 127), Rational(255, 127),
                      Rational(279, 127)};
  c.expect(tr.iterations[2].x == y2, "y2 mismatch");

  const ClassSystem& s3 = tr.iterations[2].system;
  c.expect(s3.q == int_matrix({{6, 4, 0, 1}, {4, 6, 2, 1}, {0, 2, 7, -4}, {1, 1, -4, 6}}),
           "iteration-3 Q mismatch");
  c.expect(s3.a == int_vec({31, 37, 13, 10}), "iteration-3 a mismatch");

  c.expect(tr.terminal == example_nucleolus(), "terminal y3 mismatch");

  const SurplusMatrix ms = surplus_matrix(v, tr.terminal);
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      const Rational want = ((i == 1 && j == 2) || (i == 2 && j == 1))
                                ? Rational(-5, 2)
                                : Rational(-2);
      if (ms.at(i, j) != want) {
        c.expect(false, "surplus matrix mismatch at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
      }
    }
  }
}

// C2: least-core value and vertex set.
void criterion2(Check& c) {
  const TuGame v = example_game();
  c.expect(least_core(v).epsilon == Rational(-2), "epsilon != -2");
  const auto verts = least_core_vertices(v);
  const std::vector<Allocation> want{
      {Rational(2), Rational(4), Rational(2), Rational(2)},
      {Rational(3), Rational(3), Rational(2), Rational(2)}};
  c.expect(verts == want, "vertex set mismatch");
}

// C3: Shapley value, LP-oracle pre-nucleolus, reconstruction from S(nu).
void criterion3(Check& c) {
  const TuGame v = example_game();
  c.expect(shapley_value(v) == Allocation{Rational(11, 4), Rational(17, 4),
                                          Rational(7, 4), Rational(5, 4)},
           "Shapley value mismatch");
  c.expect(prenucleolus_lp_oracle(v) == example_nucleolus(), "oracle mismatch");

  const std::vector<Coalition> family{Coalition::of({1}),       Coalition::of({3}),
                                      Coalition::of({4}),       Coalition::of({2, 3}),
                                      Coalition::of({1, 2, 3}), Coalition::of({1, 2, 4})};
  const Vec b{Rational(5, 2), Rational(2), Rational(2), Rational(11, 2), Rational(8),
              Rational(8)};
  const Allocation nu = example_nucleolus();
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (coalition_sum(nu, family[i]) != b[i]) {
      c.expect(false, "boundary vector mismatch at index " + std::to_string(i));
    }
  }
  c.expect(reconstruct_from_tight(v, family, nu) == nu, "reconstruction mismatch");
}

// C4: properties of the example game and two non-convex related games.
void criterion4(Check& c) {
  const TuGame v = example_game();
  c.expect(is_convex(v), "example not convex");
  c.expect(is_superadditive(v), "example not superadditive");
  c.expect(is_zero_monotone(v), "example not zero-monotone");
  c.expect(veto_players(v) == std::vector<int>{2}, "veto players != {2}");

  for (int k = 1; k <= 2; ++k) {
    const TuGame rel = related_game(k);
    if (k == 1) c.expect(!is_convex(rel), "related game 1 unexpectedly convex");
    const SolveTrace tr = solve_prekernel(rel, kY0);
    c.expect(tr.status == SolveStatus::Converged &&
                 tr.terminal == example_nucleolus(),
             "related game " + std::to_string(k) + " terminal mismatch");
  }
}

// C5: balancedness of S(nu) with explicit positive weights.
void criterion5(Check& c) {
  const std::vector<Coalition> family{Coalition::of({1}),       Coalition::of({3}),
                                      Coalition::of({4}),       Coalition::of({2, 3}),
                                      Coalition::of({1, 2, 3}), Coalition::of({1, 2, 4})};
  const BalancedResult b = is_balanced_collection(4, family);
  c.expect(b.balanced, "family not balanced");
  if (!b.balanced) return;
  std::ostringstream weights;
  for (std::size_t i = 0; i < family.size(); ++i) {
    c.expect(b.weights[i].sign() > 0, "nonpositive weight");
    weights << (i ? ", " : "") << "lambda" << family[i].str() << "=" << b.weights[i];
  }
  for (int k = 1; k <= 4; ++k) {
    Rational cover;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (family[i].contains(k)) cover += b.weights[i];
    }
    c.expect(cover == Rational(1), "weights do not cover player " + std::to_string(k));
  }
  std::cout << "       weights: " << weights.str() << "\n";
}

// C6: solver/oracle agreement on 200 random convex games.
void criterion6(Check& c) {
  Rng rng(20260810);
  int over_bound = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng.uniform(0, 2));
    const TuGame v = random_convex_game(rng, n);
    const Allocation start(n, v.value(v.grand()) / Rational(n));
    const SolveTrace tr = solve_prekernel(v, start);
    if (tr.status != SolveStatus::Converged) {
      c.expect(false, "trial " + std::to_string(trial) + " did not converge");
      return;
    }
    if (tr.terminal != prenucleolus_lp_oracle(v)) {
      c.expect(false, "trial " + std::to_string(trial) + " disagrees with the oracle");
      return;
    }
    if (tr.gamma_steps > theory_iteration_bound(n)) {
      ++over_bound;
      std::cout << "       note: trial " << trial << " used " << tr.gamma_steps
                << " steps (bound " << theory_iteration_bound(n) << ")\n";
    }
  }
  c.expect(over_bound * 20 <= 200, "more than 5% of runs exceeded the step bound");
  std::cout << "       200/200 exact matches; " << over_bound
            << " runs above the C(n,2)-1 bound\n";
}

// C7: Stearns transfers from 10 random imputations of the example game.
void criterion7(Check& c) {
  const TuGame v = example_game();
  const Rational tol(1, 1000000000);
  const Allocation nu = example_nucleolus();
  Rng rng(777);
  for (int k = 0; k < 10; ++k) {
    const Allocation start = random_imputation(rng, v);
    const TransferTrace tr = stearns_solve(v, start, tol);
    if (tr.status != TransferStatus::Converged) {
      c.expect(false, "run " + std::to_string(k) + " hit the step cap");
      continue;
    }
    Allocation prev = start;
    for (const auto& step : tr.steps) {
      if (coalition_sum(step.x_after, v.grand()) != v.value(v.grand())) {
        c.expect(false, "efficiency violated");
      }
      for (int p = 1; p <= 4; ++p) {
        if (step.x_after[p - 1] < v.value(Coalition::single(p))) {
          c.expect(false, "individual rationality violated");
        }
      }
      prev = step.x_after;
    }
    for (int p = 0; p < 4; ++p) {
      if ((tr.terminal[p] - nu[p]).abs() > tol * v.value(v.grand())) {
        c.expect(false, "run " + std::to_string(k) + " outside tolerance");
      }
    }
  }
}

// C8: the reduced-game procedure's selection issue, mechanized.
void criterion8(Check& c) {
  const TuGame v = example_game();
  const RgpRun bare = run_rgp_procedure(v, std::nullopt);
  c.expect(bare.verdict == RgpVerdict::SelectionAmbiguous,
           "no-supply verdict not SelectionAmbiguous");
  c.expect(bare.witness_outputs.has_value(), "missing two-vertex witness");
  if (bare.witness_outputs) {
    c.expect(!(bare.witness_outputs->first == bare.witness_outputs->second),
             "witness outcomes coincide");
  }
  const RgpRun fed = run_rgp_procedure(v, example_nucleolus());
  c.expect(fed.verdict == RgpVerdict::MatchesNucleolus,
           "supplied-nucleolus verdict not MatchesNucleolus");
}

// C9: the transfer lemma identity on fuzzed games.
void criterion9(Check& c) {
  Rng rng(909);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 5));
    const TuGame v = random_game(rng, n);
    const Allocation x = random_allocation(rng, n);
    const Rational delta = delta_one(v, x) + 1;
    const SurplusMatrix s = surplus_matrix(v, x);
    for (const auto& [i, j] : pair_order(n)) {
      Allocation shifted = x;
      shifted[i - 1] -= delta;
      shifted[j - 1] += delta;
      if (s.at(i, j) != indirect_function(v, shifted) - delta) {
        c.expect(false, "identity failed at trial " + std::to_string(trial));
        return;
      }
    }
  }
}

// C10: covariance of both solvers under strategic equivalence.
void criterion10(Check& c) {
  Rng rng(1010);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.uniform(3, 4));
    const TuGame v = random_convex_game(rng, n);
    const Rational t(rng.uniform(1, 5), rng.uniform(1, 3));
    std::vector<Rational> m;
    for (int k = 0; k < n; ++k) m.push_back(rng.rational(-4, 4, 3));
    const TuGame w = cov_transform(v, t, m);

    const Allocation ov = prenucleolus_lp_oracle(v);
    const Allocation ow = prenucleolus_lp_oracle(w);
    const SolveTrace sv = solve_prekernel(v, Allocation(n, v.value(v.grand()) / Rational(n)));
    const SolveTrace sw = solve_prekernel(w, Allocation(n, w.value(w.grand()) / Rational(n)));
    if (sv.status != SolveStatus::Converged || sw.status != SolveStatus::Converged) {
      c.expect(false, "solver did not converge at trial " + std::to_string(trial));
      return;
    }
    for (int k = 0; k < n; ++k) {
      if (ow[k] != t * ov[k] + m[k] || sw.terminal[k] != t * sv.terminal[k] + m[k]) {
        c.expect(false, "equivariance failed at trial " + std::to_string(trial));
        return;
      }
    }
  }
}

struct Criterion {
  std::string name;
  std::function<void(Check&)> body;
  double budget_seconds;  // 0 = no budget
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"C1  worked trace reproduced bit-exactly", criterion1, 1.0},
      {"C2  least-core value -2 and both vertices", criterion2, 1.0},
      {"C3  Shapley / LP-oracle / reconstruction", criterion3, 0.0},
      {"C4  properties and the non-convex related games", criterion4, 0.0},
      {"C5  balanced family with positive weights", criterion5, 0.0},
      {"C6  conjugation equals oracle on 200 convex games", criterion6, 60.0},
      {"C7  Stearns within 1e-9 of the pre-kernel point", criterion7, 0.0},
      {"C8  reduced-game audit exposes the selection issue", criterion8, 0.0},
      {"C9  transfer-lemma identity on 100 fuzzed games", criterion9, 0.0},
      {"C10 strategic-equivalence covariance, 50 games", criterion10, 0.0},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    Check check;
    const double secs = run_timed(cr.body, check);
    if (cr.budget_seconds > 0 && secs > cr.budget_seconds) {
      check.expect(false, "runtime " + std::to_string(secs) + "s over budget");
    }
    std::ostringstream line;
    line << (check.ok ? "[PASS] " : "[FAIL] ") << cr.name;
    line << "  (" << secs << "s)";
    if (!check.ok) line << "  -- " << check.why.str();
    std::cout << line.str() << "\n";
    if (!check.ok) ++failures;
  }
  return failures;
}
