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

#ifndef TUGAME_SURPLUS_HPP
#define TUGAME_SURPLUS_HPP

#include <utility>
#include <vector>

#include "tugame/game.hpp"

namespace tugame {

/// s[i][j] = maximum excess over coalitions containing i but not j.
/// Diagonal unused (zero).
class SurplusMatrix {
 public:
  explicit SurplusMatrix(int n) : n_(n), s_(static_cast<std::size_t>(n) * n) {}
  int n() const { return n_; }
  const Rational& at(int i, int j) const { return s_[idx(i, j)]; }
  Rational& at(int i, int j) { return s_[idx(i, j)]; }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }
  int n_;
  std::vector<Rational> s_;
};

/// Single pass over all 2^n coalitions, updating every admissible (i,j) cell.
SurplusMatrix surplus_matrix(const TuGame& v, const Allocation& x);

/// All coalitions attaining s_ij(x,v), sorted by the coalition total order.
std::vector<Coalition> most_effective(const TuGame& v, const Allocation& x,
                                      int i, int j);

/// The fixed ordered-pair order: (1,2),(1,3),...,(n-1,n) then
/// (2,1),(3,1),(3,2),(4,1),... — the reversed pairs sorted by (j,i).
std::vector<std::pair<int, int>> pair_order(int n);

/// Index of ordered pair (i,j) within pair_order(n).
inline std::size_t pair_slot(int n, int i, int j) {
  const int lo = i < j ? i : j;
  const int hi = i < j ? j : i;
  if (i < j) {
    return static_cast<std::size_t>((lo - 1) * n - lo * (lo + 1) / 2 + hi - 1);
  }
  return static_cast<std::size_t>(n * (n - 1) / 2 + (hi - 1) * (hi - 2) / 2 + lo - 1);
}

/// The lexicographically smallest most effective coalition per ordered pair,
/// in the fixed pair order. Defines the payoff equivalence class of x.
class PairSelection {
 public:
  PairSelection(int n, std::vector<Coalition> chosen)
      : n_(n), chosen_(std::move(chosen)) {}

  int n() const { return n_; }
  const std::vector<Coalition>& chosen() const { return chosen_; }

  /// Selected coalition for ordered pair (i, j), i != j.
  Coalition at(int i, int j) const;

  friend bool operator==(const PairSelection& a, const PairSelection& b) {
    return a.n_ == b.n_ && a.chosen_ == b.chosen_;
  }

 private:
  int n_;
  std::vector<Coalition> chosen_;  // parallel to pair_order(n)
};

PairSelection lex_selection(const TuGame& v, const Allocation& x);

/// Payoff-equivalence test: S(x) == S(y) elementwise. Requires equal n.
bool same_class(const PairSelection& a, const PairSelection& b);

}  // namespace tugame

#endif  // TUGAME_SURPLUS_HPP
