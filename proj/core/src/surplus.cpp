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

#include "tugame/surplus.hpp"

#include <algorithm>
#include <stdexcept>

namespace tugame {

SurplusMatrix surplus_matrix(const TuGame& v, const Allocation& x) {
  const int n = v.n();
  SurplusMatrix s(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  for (std::uint32_t m = 1; m < v.num_coalitions(); ++m) {
    const Coalition S(m);
    const Rational e = excess(v, S, x);
    for (int i = 1; i <= n; ++i) {
      if (!S.contains(i)) continue;
      for (int j = 1; j <= n; ++j) {
        if (j == i || S.contains(j)) continue;
        const std::size_t idx = static_cast<std::size_t>(i - 1) * n + (j - 1);
        if (!seen[idx] || e > s.at(i, j)) {
          s.at(i, j) = e;
          seen[idx] = true;
        }
      }
    }
  }
  return s;
}

std::vector<Coalition> most_effective(const TuGame& v, const Allocation& x,
                                      int i, int j) {
  if (i == j) throw std::invalid_argument("most_effective: need i != j");
  bool have = false;
  Rational best;
  std::vector<Coalition> out;
  for (std::uint32_t m = 1; m < v.num_coalitions(); ++m) {
    const Coalition S(m);
    if (!S.contains(i) || S.contains(j)) continue;
    Rational e = excess(v, S, x);
    if (!have || e > best) {
      best = std::move(e);
      out.assign(1, S);
      have = true;
    } else if (e == best) {
      out.push_back(S);
    }
  }
  std::sort(out.begin(), out.end(), CoalitionLess{});
  return out;
}

std::vector<std::pair<int, int>> pair_order(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  }
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) pairs.emplace_back(j, i);
  }
  return pairs;
}

Coalition PairSelection::at(int i, int j) const {
  if (i == j) throw std::invalid_argument("PairSelection::at: need i != j");
  return chosen_[pair_slot(n_, i, j)];
}

PairSelection lex_selection(const TuGame& v, const Allocation& x) {
  const int n = v.n();
  const auto pairs = pair_order(n);
  std::vector<Coalition> chosen(pairs.size());
  std::vector<Rational> best(pairs.size());
  std::vector<bool> seen(pairs.size(), false);

  for (std::uint32_t m = 1; m < v.num_coalitions(); ++m) {
    const Coalition S(m);
    const Rational e = excess(v, S, x);
    for (int i = 1; i <= n; ++i) {
      if (!S.contains(i)) continue;
      for (int j = 1; j <= n; ++j) {
        if (j == i || S.contains(j)) continue;
        const std::size_t k = pair_slot(n, i, j);
        if (!seen[k] || e > best[k]) {
          best[k] = e;
          chosen[k] = S;
          seen[k] = true;
        } else if (e == best[k] && coalition_less(S, chosen[k])) {
          // Same surplus: keep the total-order minimum, which is exactly the
          // min-cardinality-then-lexicographic representative.
          chosen[k] = S;
        }
      }
    }
  }
  return PairSelection(n, std::move(chosen));
}

bool same_class(const PairSelection& a, const PairSelection& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("same_class: selections over different player counts");
  }
  return a == b;
}

}  // namespace tugame
