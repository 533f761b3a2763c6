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

#ifndef TUGAME_GAME_HPP
#define TUGAME_GAME_HPP

#include <cstddef>
#include <vector>

#include "tugame/coalition.hpp"
#include "tugame/rational.hpp"

namespace tugame {

/// Payoff vector x in Q^n, indexed by player-1. Not necessarily efficient;
/// efficiency is a checked predicate, not an invariant.
using Allocation = std::vector<Rational>;

/// A TU game: characteristic function over all 2^n coalitions, exact rational
/// values, indexed by coalition mask. Immutable after construction and safe
/// to share across threads.
class TuGame {
 public:
  /// Validates v(empty) = 0, v(N) > 0, n >= 2, 2^n values.
  static TuGame from_values(int n, std::vector<Rational> values);

  /// Skips the v(N) > 0 check. Derived games (reduced games, level games of
  /// the RGP procedure) can legitimately end up with a nonpositive grand
  /// value; every computation here tolerates that.
  static TuGame unchecked(int n, std::vector<Rational> values);

  int n() const { return n_; }
  std::size_t num_coalitions() const { return values_.size(); }
  Coalition grand() const { return Coalition::full(n_); }
  const Rational& value(Coalition s) const { return values_[s.mask()]; }
  const std::vector<Rational>& values() const { return values_; }

 private:
  TuGame(int n, std::vector<Rational> values)
      : n_(n), values_(std::move(values)) {}

  int n_ = 0;
  std::vector<Rational> values_;
};

/// x(S) = sum of x_k over members of S; 0 for the empty coalition.
Rational coalition_sum(const Allocation& x, Coalition s);

/// e(S,x) = v(S) - x(S).
Rational excess(const TuGame& v, Coalition s, const Allocation& x);

/// Excesses of all 2^n coalitions in mask order (component 0 is 0).
std::vector<Rational> excess_vector(const TuGame& v, const Allocation& x);

/// Indirect function pi(x) = max over ALL S (including empty) of e(S,x).
/// Always >= 0.
Rational indirect_function(const TuGame& v, const Allocation& x);

/// delta_1(x,v) = max over k in N and S subseteq N\{k} of |v(S+k)-v(S)-x_k|.
Rational delta_one(const TuGame& v, const Allocation& x);

bool is_efficient(const TuGame& v, const Allocation& x);
bool is_imputation(const TuGame& v, const Allocation& x);

// Game-property predicates. Exhaustive pair enumeration, O(4^n) for the
// superadditive/convex scans; exact and acceptable at desk scale n <= 12.
bool is_monotone(const TuGame& v);
bool is_superadditive(const TuGame& v);
bool is_convex(const TuGame& v);
bool is_zero_monotone(const TuGame& v);

/// Players k with v(S) = 0 for every coalition S not containing k.
std::vector<int> veto_players(const TuGame& v);

/// Marginal-contribution average, exact.
Allocation shapley_value(const TuGame& v);

/// Davis/Maschler reduced game on S at x. Players of S are re-indexed
/// 1..|S| preserving ascending order; `players[k-1]` is the original id of
/// new player k.
struct ReducedGame {
  TuGame game;
  std::vector<int> players;
};

/// v_{S,x}(T) = max over Q subseteq N\S of v(T u Q) - x(Q) for proper
/// nonempty T, with v_{S,x}(S) = v(N) - x(N\S). Rejects S = empty.
ReducedGame reduced_game(const TuGame& v, Coalition s, const Allocation& x);

}  // namespace tugame

#endif  // TUGAME_GAME_HPP
