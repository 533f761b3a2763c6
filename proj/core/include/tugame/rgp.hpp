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

#ifndef TUGAME_RGP_HPP
#define TUGAME_RGP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tugame/game.hpp"
#include "tugame/lpkit.hpp"

namespace tugame {

/// Audit of the reduced-game nucleolus procedure: run it as specified and
/// expose where its least-core selection is not forced. The procedure pins
/// down SOME least-core member; only a supplied allocation (or point
/// least-cores throughout) makes the answer well defined.

/// Least-core value plus one coalition tight at every least-core point,
/// preferring the first in the coalition total order. `forced` is false when
/// no constraint is universally tight and a witness-tight fallback was used.
struct EssentialCoalition {
  Coalition coalition;
  Rational epsilon;
  bool forced;
};
EssentialCoalition essential_coalition(const TuGame& v);

/// The procedure's simplified reduction: on `keep`,
/// v'(T) = max{ v(T), v(T u removed) - x(removed) } for proper nonempty T and
/// v'(keep) = v(keep u removed) - x(removed). `keep` and `removed` must
/// partition the player set; x_removed lists the removed players' payoffs in
/// ascending player order.
TuGame rgp_reduce(const TuGame& v, Coalition keep, Coalition removed,
                  const std::vector<Rational>& x_removed);

enum class RgpVerdict { MatchesNucleolus, SelectionAmbiguous, Mismatch };

struct RgpLevelFlag {
  int player;   // outer loop player whose chain hit the ambiguity
  int level;    // 1-based level within that chain
  Coalition chosen;                   // essential coalition used (original ids)
  std::vector<Coalition> alternatives;  // other universally tight choices
  bool ambiguous;  // least-core of the level game is not a single point
};

struct RgpRun {
  Allocation per_player;        // the procedure's claimed nucleolus
  std::vector<RgpLevelFlag> flags;
  RgpVerdict verdict = RgpVerdict::Mismatch;
  bool convex_input = false;
  /// Two distinct least-core allocations that the procedure validates into
  /// two distinct answers (the selection-issue witness), when found.
  std::optional<std::pair<Allocation, Allocation>> witness_inputs;
  std::optional<std::pair<Allocation, Allocation>> witness_outputs;
};

/// Runs the per-player shrink loop. `supplied` pins removed players' payoffs
/// (the circular "assume the nucleolus is known" step made explicit); without
/// it each level falls back to that level's least-core witness and flags any
/// level whose least-core is not a point. Verdict: SelectionAmbiguous when a
/// flag fired; otherwise MatchesNucleolus / Mismatch by exact comparison with
/// the sequential-LP pre-nucleolus.
RgpRun run_rgp_procedure(const TuGame& v,
                         const std::optional<Allocation>& supplied);

}  // namespace tugame

#endif  // TUGAME_RGP_HPP
