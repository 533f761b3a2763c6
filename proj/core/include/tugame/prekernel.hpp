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

#ifndef TUGAME_PREKERNEL_HPP
#define TUGAME_PREKERNEL_HPP

#include <vector>

#include "tugame/game.hpp"
#include "tugame/linalg.hpp"
#include "tugame/surplus.hpp"

namespace tugame {

/// Per-class quadratic system derived from a PairSelection.
///
/// Column conventions follow the worked-example form of the construction:
/// E_{ij} = 1_{S_ji} - 1_{S_ij} for unordered pairs i<j, E_0 = 1_N,
/// alpha_{ij} = v(S_ji) - v(S_ij), alpha_0 = v(N), Q = E E^T, a = E alpha.
/// With these signs the class function is h_gamma(x) = ||E^T x - alpha||^2 =
/// <x,Qx> - 2<x,a> + ||alpha||^2 and its minimizers solve Q x = a.
struct ClassSystem {
  int n = 0;
  Mat e;            // n x q, q = C(n,2) + 1
  Vec alpha;        // q
  Mat q;            // n x n, E E^T
  Vec a;            // n, E alpha
  Rational alpha_norm2;  // ||alpha||^2, the constant term of h_gamma
};

ClassSystem build_system(const TuGame& v, const PairSelection& sel);

/// h(x) = sum over i<j of (s_ij - s_ji)^2 + (x(N) - v(N))^2. Zero exactly on
/// the pre-kernel.
Rational h_value(const TuGame& v, const Allocation& x);

/// The class quadratic at x; equals h(x) whenever x lies in the payoff
/// equivalence class the system was built from.
Rational h_gamma_value(const ClassSystem& sys, const Allocation& x);

/// Minimum-norm exact solution of min ||E^T x - alpha||^2, i.e. of Q x = a.
Allocation gamma_step(const ClassSystem& sys);

/// x(N) = v(N) and s_ij = s_ji for all pairs, exactly.
bool is_prekernel(const TuGame& v, const Allocation& x);

enum class SolveStatus { Converged, IterationCapHit, DegenerateSystem };

struct SolveIteration {
  Allocation x;
  PairSelection selection;  // S(x)
  ClassSystem system;       // built from S(x)
};

struct SolveTrace {
  std::vector<SolveIteration> iterations;
  Allocation terminal;
  SolveStatus status = SolveStatus::IterationCapHit;
  int gamma_steps = 0;
  /// Converged but needed more than C(n,2)-1 steps (logged, never fatal; the
  /// bound is cited from external work).
  bool exceeded_theory_bound = false;
};

/// C(n,2) - 1, the cited worst-case step bound.
int theory_iteration_bound(int n);

/// C(n,2) + n, the hard safeguard used as the default loop cap.
int default_iteration_cap(int n);

/// Algorithm: iterate x <- gamma_step(build_system(v, lex_selection(v, x)))
/// until the selection repeats with h = 0. A start with h(start) = 0 returns
/// immediately with zero gamma steps. max_iter <= 0 selects the default cap.
SolveTrace solve_prekernel(const TuGame& v, const Allocation& start,
                           int max_iter = 0);

}  // namespace tugame

#endif  // TUGAME_PREKERNEL_HPP
