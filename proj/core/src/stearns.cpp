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

#include "tugame/stearns.hpp"

#include <stdexcept>
#include <utility>

#include "tugame/surplus.hpp"

namespace tugame {

TransferTrace stearns_solve(const TuGame& v, const Allocation& start,
                            const Rational& tol, long max_steps) {
  if (start.size() != static_cast<std::size_t>(v.n())) {
    throw std::invalid_argument("stearns_solve: start vector arity mismatch");
  }
  if (!is_imputation(v, start)) {
    throw std::invalid_argument("stearns_solve: start is not an imputation");
  }
  if (tol.sign() <= 0) {
    throw std::invalid_argument("stearns_solve: tolerance must be positive");
  }

  const auto pairs = pair_order(v.n());
  const Rational vn = v.value(v.grand());
  TransferTrace trace;
  Allocation x = start;

  for (long step = 0; step <= max_steps; ++step) {
    const SurplusMatrix s = surplus_matrix(v, x);
    // delta* and its first maximizing pair in the fixed pair order.
    bool have = false;
    Rational delta_star;
    int best_i = 0, best_j = 0;
    for (const auto& [i, j] : pairs) {
      Rational d = s.at(i, j) - s.at(j, i);
      if (!have || d > delta_star) {
        delta_star = std::move(d);
        best_i = i;
        best_j = j;
        have = true;
      }
    }
    if (delta_star <= tol * vn) {
      trace.terminal = std::move(x);
      trace.relative_gap = delta_star / vn;
      trace.status = TransferStatus::Converged;
      return trace;
    }
    if (step == max_steps) {
      trace.terminal = std::move(x);
      trace.relative_gap = delta_star / vn;
      trace.status = TransferStatus::StepCapHit;
      return trace;
    }
    // Transfer from j* to i*, capped so the payer keeps individual
    // rationality.
    const Rational cap = x[best_j - 1] - v.value(Coalition::single(best_j));
    Rational delta = delta_star / Rational(2);
    if (cap < delta) delta = cap;
    x[best_i - 1] += delta;
    x[best_j - 1] -= delta;
    trace.steps.push_back(TransferStep{best_i, best_j, std::move(delta), x, delta_star});
  }
  return trace;  // unreachable
}

}  // namespace tugame
