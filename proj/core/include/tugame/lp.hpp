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

#ifndef TUGAME_LP_HPP
#define TUGAME_LP_HPP

#include <optional>
#include <vector>

#include "tugame/linalg.hpp"
#include "tugame/rational.hpp"

namespace tugame {

enum class Relation { LessEq, Eq, GreaterEq };

struct LpRow {
  Vec coeffs;
  Relation rel;
  Rational rhs;
};

/// Exact rational linear program: minimize objective . x subject to the rows
/// and optional per-variable bounds. Variables are free unless bounded.
struct LpProblem {
  explicit LpProblem(int num_vars)
      : num_vars(num_vars), objective(num_vars),
        lower(num_vars), upper(num_vars) {}

  int num_vars;
  Vec objective;
  std::vector<LpRow> rows;
  std::vector<std::optional<Rational>> lower, upper;

  void add_row(Vec coeffs, Relation rel, Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  Vec x;           // only for Optimal
  Rational value;  // only for Optimal
};

/// Two-phase primal simplex over Q with Bland's least-index anti-cycling
/// rule. Deterministic. Every Optimal result is re-verified exactly against
/// the standardized system by a primal/dual certificate (complementary
/// slackness and strong duality); a failed audit throws std::logic_error.
LpResult lp_solve(const LpProblem& p);

}  // namespace tugame

#endif  // TUGAME_LP_HPP
