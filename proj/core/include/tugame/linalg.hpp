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

#ifndef TUGAME_LINALG_HPP
#define TUGAME_LINALG_HPP

#include <optional>
#include <vector>

#include "tugame/rational.hpp"

namespace tugame {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

int rank(Mat a);

/// Complete solution set of A x = b over Q, or nullopt when inconsistent.
/// `particular` has the non-pivot coordinates set to zero.
struct AffineSolutionSet {
  Vec particular;
  std::vector<Vec> null_basis;
};
std::optional<AffineSolutionSet> solve_affine(Mat a, Vec b);

/// Minimum-Euclidean-norm solution of a consistent system (pseudo-inverse
/// semantics): parameterizes the affine solution set and minimizes the norm
/// through a small secondary linear system. Throws on inconsistency.
Vec min_norm_solution(const Mat& a, const Vec& b);

/// Unique solution of a (possibly overdetermined) full-column-rank system.
/// Throws std::invalid_argument when the rank is deficient or the system is
/// inconsistent.
Vec solve_unique(const Mat& a, const Vec& b);

}  // namespace tugame

#endif  // TUGAME_LINALG_HPP
