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

#ifndef TUGAME_LPKIT_HPP
#define TUGAME_LPKIT_HPP

#include <vector>

#include "tugame/game.hpp"
#include "tugame/lp.hpp"

namespace tugame {

struct LeastCoreResult {
  Rational epsilon;
  Allocation witness;                        // one optimal allocation
  std::vector<Coalition> tight;              // e(S, witness) = epsilon, total order
  std::vector<Coalition> universally_tight;  // tight at EVERY optimum, total order
};

/// min epsilon s.t. x(N) = v(N) and x(S) >= v(S) - epsilon for all proper
/// nonempty S. Always feasible and bounded. Universal tightness is decided
/// by exact probe LPs over the optimal face.
LeastCoreResult least_core(const TuGame& v);

/// All vertices of the least-core polytope, enumerated from (n-1)-subsets of
/// the constraints that can be tight on the face, solved exactly and filtered
/// for feasibility. Deduplicated, sorted lexicographically. Rejects n > cap_n.
std::vector<Allocation> least_core_vertices(const TuGame& v, int cap_n = 6);

/// Efficiency plus x(S) >= v(S) for every proper S, by full scan.
bool core_contains(const TuGame& v, const Allocation& x);
bool core_nonempty(const TuGame& v);

struct BalancedResult {
  bool balanced = false;
  std::vector<Rational> weights;  // positive weights, parallel to the input
};

/// Whether positive weights lambda_S exist with sum lambda_S 1_S = 1_N.
/// Decided exactly by a max-min-weight LP; strict positivity is the sign of
/// the optimal minimum weight. Rejects empty input or the empty coalition.
BalancedResult is_balanced_collection(int n, const std::vector<Coalition>& coalitions);

/// Classical sequential-LP pre-nucleolus: minimize the maximum excess, fix
/// the constraints tight on the whole optimal face as equalities, drop
/// coalitions spanned by the fixed system, recurse until the allocation is
/// pinned. Exact.
Allocation prenucleolus_lp_oracle(const TuGame& v);

/// Solves [1_S]^T y = (x(S))_S for the given coalition stack (rank n
/// required) and returns y. Throws std::invalid_argument on rank deficiency.
Allocation reconstruct_from_tight(const TuGame& v,
                                  const std::vector<Coalition>& coalitions,
                                  const Allocation& x);

/// Diagnostic: the coalitions attaining the maximum excess at x form a
/// balanced collection (the top level of Kohlberg's criterion).
bool kohlberg_top_balanced(const TuGame& v, const Allocation& x);

}  // namespace tugame

#endif  // TUGAME_LPKIT_HPP
