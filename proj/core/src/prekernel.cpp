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

#include "tugame/prekernel.hpp"

#include <stdexcept>
#include <utility>

namespace tugame {

ClassSystem build_system(const TuGame& v, const PairSelection& sel) {
  const int n = v.n();
  if (sel.n() != n) {
    throw std::invalid_argument("build_system: selection does not match the game");
  }
  const std::size_t q = static_cast<std::size_t>(n) * (n - 1) / 2 + 1;

  ClassSystem sys;
  sys.n = n;
  sys.e.assign(n, Vec(q));
  sys.alpha.assign(q, Rational());

  std::size_t col = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++col) {
      const Coalition sij = sel.at(i, j);
      const Coalition sji = sel.at(j, i);
      for (int k = 1; k <= n; ++k) {
        sys.e[k - 1][col] = Rational(static_cast<int>(sji.contains(k)) -
                                     static_cast<int>(sij.contains(k)));
      }
      sys.alpha[col] = v.value(sji) - v.value(sij);
    }
  }
  for (int k = 1; k <= n; ++k) sys.e[k - 1][q - 1] = Rational(1);
  sys.alpha[q - 1] = v.value(v.grand());

  sys.q.assign(n, Vec(n));
  for (int r = 0; r < n; ++r) {
    for (int s = r; s < n; ++s) {
      Rational dot;
      for (std::size_t c = 0; c < q; ++c) dot += sys.e[r][c] * sys.e[s][c];
      sys.q[r][s] = dot;
      sys.q[s][r] = std::move(dot);
    }
  }
  sys.a.assign(n, Rational());
  for (int r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < q; ++c) sys.a[r] += sys.e[r][c] * sys.alpha[c];
  }
  for (const auto& al : sys.alpha) sys.alpha_norm2 += al * al;
  return sys;
}

Rational h_value(const TuGame& v, const Allocation& x) {
  const SurplusMatrix s = surplus_matrix(v, x);
  Rational total;
  for (int i = 1; i <= v.n(); ++i) {
    for (int j = i + 1; j <= v.n(); ++j) {
      const Rational f = s.at(i, j) - s.at(j, i);
      total += f * f;
    }
  }
  const Rational f0 = coalition_sum(x, v.grand()) - v.value(v.grand());
  total += f0 * f0;
  return total;
}

Rational h_gamma_value(const ClassSystem& sys, const Allocation& x) {
  Rational total = sys.alpha_norm2;
  // <x,Qx> - 2<x,a> + ||alpha||^2
  for (int r = 0; r < sys.n; ++r) {
    Rational row;
    for (int c = 0; c < sys.n; ++c) row += sys.q[r][c] * x[c];
    total += x[r] * row;
    total -= Rational(2) * x[r] * sys.a[r];
  }
  return total;
}

Allocation gamma_step(const ClassSystem& sys) {
  // Q x = a is always consistent: a = E alpha lies in range(E) = range(Q).
  return min_norm_solution(sys.q, sys.a);
}

bool is_prekernel(const TuGame& v, const Allocation& x) {
  if (!is_efficient(v, x)) return false;
  const SurplusMatrix s = surplus_matrix(v, x);
  for (int i = 1; i <= v.n(); ++i) {
    for (int j = i + 1; j <= v.n(); ++j) {
      if (s.at(i, j) != s.at(j, i)) return false;
    }
  }
  return true;
}

int theory_iteration_bound(int n) { return n * (n - 1) / 2 - 1; }

int default_iteration_cap(int n) { return n * (n - 1) / 2 + n; }

SolveTrace solve_prekernel(const TuGame& v, const Allocation& start,
                           int max_iter) {
  if (start.size() != static_cast<std::size_t>(v.n())) {
    throw std::invalid_argument("solve_prekernel: start vector arity mismatch");
  }
  const int cap = max_iter > 0 ? max_iter : default_iteration_cap(v.n());

  SolveTrace trace;
  Allocation x = start;
  PairSelection sel = lex_selection(v, x);
  trace.iterations.push_back({x, sel, build_system(v, sel)});

  if (h_value(v, x).is_zero()) {
    trace.terminal = std::move(x);
    trace.status = SolveStatus::Converged;
    return trace;
  }

  for (int k = 0; k < cap; ++k) {
    Allocation next = gamma_step(trace.iterations.back().system);
    ++trace.gamma_steps;
    PairSelection next_sel = lex_selection(v, next);
    trace.iterations.push_back({next, next_sel, build_system(v, next_sel)});

    if (h_value(v, next).is_zero()) {
      // Selection repetition plus h = 0 is the normal exit; landing on a
      // pre-kernel point of a fresh class terminates as well since h = 0
      // already certifies membership.
      trace.terminal = std::move(next);
      trace.status = SolveStatus::Converged;
      trace.exceeded_theory_bound = trace.gamma_steps > theory_iteration_bound(v.n());
      return trace;
    }
    if (same_class(next_sel, sel)) {
      // Stationary but unbalanced: the next step would reproduce this exact
      // iterate forever, so further looping only burns the cap.
      trace.terminal = std::move(next);
      trace.status = SolveStatus::IterationCapHit;
      return trace;
    }
    x = std::move(next);
    sel = std::move(next_sel);
  }
  trace.terminal = trace.iterations.back().x;
  trace.status = SolveStatus::IterationCapHit;
  return trace;
}

}  // namespace tugame
