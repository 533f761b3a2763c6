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

#ifndef TUGAME_STEARNS_HPP
#define TUGAME_STEARNS_HPP

#include <vector>

#include "tugame/game.hpp"

namespace tugame {

struct TransferStep {
  int receiver;          // i*, the player with the larger surplus
  int payer;             // j*
  Rational delta;        // amount moved from j* to i*, >= 0
  Allocation x_after;
  Rational delta_star;   // max_{i!=j} s_ij - s_ji before the transfer
};

enum class TransferStatus { Converged, StepCapHit };

struct TransferTrace {
  std::vector<TransferStep> steps;
  Allocation terminal;
  Rational relative_gap;  // delta_star / v(N) at termination
  TransferStatus status = TransferStatus::Converged;
};

/// Bilateral maximal-transfer scheme for approximating a kernel element.
/// Each round balances the pair with the largest surplus difference,
/// transferring min(delta*/2, x_j - v({j})) from the payer; stops once
/// delta*/v(N) <= tol. The start must be an imputation (throws
/// std::invalid_argument otherwise, as for tol <= 0); every step preserves
/// efficiency and individual rationality exactly.
TransferTrace stearns_solve(const TuGame& v, const Allocation& start,
                            const Rational& tol, long max_steps = 100000);

}  // namespace tugame

#endif  // TUGAME_STEARNS_HPP
