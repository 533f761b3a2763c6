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

#include "tugame/lpkit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tugame {

namespace {

Vec char_vector(Coalition s, int n) {
  Vec e(n);
  for (int k = 1; k <= n; ++k) {
    if (s.contains(k)) e[k - 1] = Rational(1);
  }
  return e;
}

// One level of the lexicographic scheme: equalities pinned so far plus
// "x(S) >= v(S) - eps" for the still-free coalitions.
struct Level {
  int n;
  std::vector<Vec> eq_lhs;
  Vec eq_rhs;
  std::vector<Coalition> free;  // inequality coalitions
  const TuGame* game;
};

// min eps over the level; returns (eps, witness).
std::pair<Rational, Allocation> solve_level(const Level& lv) {
  LpProblem p(lv.n + 1);
  p.objective[lv.n] = Rational(1);
  for (std::size_t i = 0; i < lv.eq_lhs.size(); ++i) {
    Vec row = lv.eq_lhs[i];
    row.push_back(Rational(0));
    p.add_row(std::move(row), Relation::Eq, lv.eq_rhs[i]);
  }
  for (Coalition s : lv.free) {
    Vec row = char_vector(s, lv.n);
    row.push_back(Rational(1));  // x(S) + eps >= v(S)
    p.add_row(std::move(row), Relation::GreaterEq, lv.game->value(s));
  }
  const LpResult r = lp_solve(p);
  if (r.status != LpStatus::Optimal) {
    throw std::logic_error("level LP must be feasible and bounded");
  }
  Allocation x(r.x.begin(), r.x.begin() + lv.n);
  return {r.x[lv.n], std::move(x)};
}

Rational free_excess(const Level& lv, Coalition s, const Allocation& x) {
  return lv.game->value(s) - coalition_sum(x, s);
}

// Coalitions among `candidates` whose constraint is tight at every point of
// the optimal face {equalities, x(S) >= v(S)-eps}. Iterated probe: maximize
// the total slack of the surviving candidates; anything slack at the probe
// optimum is not universally tight; stop when the probe cannot move.
std::vector<Coalition> universally_tight_on_face(const Level& lv,
                                                 const Rational& eps,
                                                 std::vector<Coalition> candidates) {
  while (!candidates.empty()) {
    LpProblem p(lv.n);
    for (Coalition s : candidates) {
      for (int k = 1; k <= lv.n; ++k) {
        if (s.contains(k)) p.objective[k - 1] -= Rational(1);  // maximize sum x(S)
      }
    }
    for (std::size_t i = 0; i < lv.eq_lhs.size(); ++i) {
      p.add_row(lv.eq_lhs[i], Relation::Eq, lv.eq_rhs[i]);
    }
    for (Coalition s : lv.free) {
      p.add_row(char_vector(s, lv.n), Relation::GreaterEq, lv.game->value(s) - eps);
    }
    const LpResult r = lp_solve(p);
    if (r.status != LpStatus::Optimal) {
      throw std::logic_error("tightness probe LP must be feasible and bounded");
    }
    std::vector<Coalition> still;
    for (Coalition s : candidates) {
      if (free_excess(lv, s, r.x) == eps) still.push_back(s);
    }
    if (still.size() == candidates.size()) break;
    candidates = std::move(still);
  }
  return candidates;
}

// Reduced row-echelon basis for span tests of characteristic vectors.
struct SpanBasis {
  std::vector<Vec> rows;
  std::vector<int> pivots;
  int dim;

  explicit SpanBasis(int dim) : dim(dim) {}

  bool contains(Vec v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int c = pivots[r];
      if (!v[c].is_zero()) {
        const Rational f = v[c];
        for (int k = 0; k < dim; ++k) v[k] -= f * rows[r][k];
      }
    }
    return std::all_of(v.begin(), v.end(),
                       [](const Rational& x) { return x.is_zero(); });
  }

  // Returns false when v was already in the span.
  bool add(Vec v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int c = pivots[r];
      if (!v[c].is_zero()) {
        const Rational f = v[c];
        for (int k = 0; k < dim; ++k) v[k] -= f * rows[r][k];
      }
    }
    int piv = -1;
    for (int k = 0; k < dim; ++k) {
      if (!v[k].is_zero()) { piv = k; break; }
    }
    if (piv < 0) return false;
    const Rational f = v[piv];
    for (auto& x : v) x /= f;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r][piv].is_zero()) {
        const Rational g = rows[r][piv];
        for (int k = 0; k < dim; ++k) rows[r][k] -= g * v[k];
      }
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }

  int rank() const { return static_cast<int>(rows.size()); }
};

}  // namespace

LeastCoreResult least_core(const TuGame& v) {
  const int n = v.n();
  Level lv{n, {char_vector(v.grand(), n)}, {v.value(v.grand())}, {}, &v};
  for (std::uint32_t m = 1; m < v.grand().mask(); ++m) lv.free.push_back(Coalition(m));

  auto [eps, witness] = solve_level(lv);

  LeastCoreResult out;
  out.epsilon = eps;
  out.witness = witness;
  for (Coalition s : lv.free) {
    if (excess(v, s, witness) == eps) out.tight.push_back(s);
  }
  std::sort(out.tight.begin(), out.tight.end(), CoalitionLess{});
  out.universally_tight = universally_tight_on_face(lv, eps, out.tight);
  std::sort(out.universally_tight.begin(), out.universally_tight.end(), CoalitionLess{});
  return out;
}

std::vector<Allocation> least_core_vertices(const TuGame& v, int cap_n) {
  const int n = v.n();
  if (n > cap_n) {
    throw std::invalid_argument("least_core_vertices: player count exceeds cap");
  }
  const LeastCoreResult lc = least_core(v);
  Level lv{n, {char_vector(v.grand(), n)}, {v.value(v.grand())}, {}, &v};
  for (std::uint32_t m = 1; m < v.grand().mask(); ++m) lv.free.push_back(Coalition(m));

  // Constraints that can be tight somewhere on the face: min x(S) attains
  // v(S) - eps. Only those can be active at a vertex.
  std::vector<Coalition> tightable;
  for (Coalition s : lv.free) {
    LpProblem p(n);
    p.objective = char_vector(s, n);
    for (std::size_t i = 0; i < lv.eq_lhs.size(); ++i) {
      p.add_row(lv.eq_lhs[i], Relation::Eq, lv.eq_rhs[i]);
    }
    for (Coalition t : lv.free) {
      p.add_row(char_vector(t, n), Relation::GreaterEq, v.value(t) - lc.epsilon);
    }
    const LpResult r = lp_solve(p);
    if (r.status != LpStatus::Optimal) {
      throw std::logic_error("vertex probe LP must be feasible and bounded");
    }
    if (r.value == v.value(s) - lc.epsilon) tightable.push_back(s);
  }

  std::set<Allocation> verts;
  const std::size_t m = tightable.size();
  const std::size_t want = static_cast<std::size_t>(n - 1);
  auto try_subset = [&](const std::vector<std::size_t>& idx) {
    Mat rows{char_vector(v.grand(), n)};
    Vec rhs{v.value(v.grand())};
    for (std::size_t k : idx) {
      rows.push_back(char_vector(tightable[k], n));
      rhs.push_back(v.value(tightable[k]) - lc.epsilon);
    }
    if (const auto sol = solve_affine(rows, rhs);
        sol && sol->null_basis.empty()) {
      bool feasible = true;
      for (Coalition s : lv.free) {
        if (excess(v, s, sol->particular) > lc.epsilon) { feasible = false; break; }
      }
      if (feasible) verts.insert(sol->particular);
    }
  };
  if (want == 0) {
    try_subset({});
  } else if (m >= want) {
    std::vector<std::size_t> idx(want);
    for (std::size_t k = 0; k < want; ++k) idx[k] = k;
    while (true) {
      try_subset(idx);
      std::size_t k = want;
      while (k > 0) {
        --k;
        if (idx[k] != k + m - want) break;
      }
      if (idx[k] == k + m - want) break;
      ++idx[k];
      for (std::size_t j = k + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {verts.begin(), verts.end()};
}

bool core_contains(const TuGame& v, const Allocation& x) {
  if (!is_efficient(v, x)) return false;
  for (std::uint32_t m = 1; m < v.grand().mask(); ++m) {
    if (excess(v, Coalition(m), x).sign() > 0) return false;
  }
  return true;
}

bool core_nonempty(const TuGame& v) { return least_core(v).epsilon.sign() <= 0; }

BalancedResult is_balanced_collection(int n, const std::vector<Coalition>& coalitions) {
  if (coalitions.empty()) {
    throw std::invalid_argument("is_balanced_collection: empty collection");
  }
  for (Coalition s : coalitions) {
    if (s.empty()) {
      throw std::invalid_argument("is_balanced_collection: empty coalition not allowed");
    }
    if (!s.subset_of(Coalition::full(n))) {
      throw std::invalid_argument("is_balanced_collection: coalition outside the player set");
    }
  }
  const int m = static_cast<int>(coalitions.size());
  // Variables: lambda_1..lambda_m, t. Maximize t subject to the covering
  // equalities, lambda >= 0, lambda_i >= t.
  LpProblem p(m + 1);
  p.objective[m] = Rational(-1);
  for (int k = 1; k <= n; ++k) {
    Vec row(m + 1);
    for (int i = 0; i < m; ++i) {
      if (coalitions[i].contains(k)) row[i] = Rational(1);
    }
    p.add_row(std::move(row), Relation::Eq, Rational(1));
  }
  for (int i = 0; i < m; ++i) {
    Vec row(m + 1);
    row[i] = Rational(1);
    row[m] = Rational(-1);
    p.add_row(std::move(row), Relation::GreaterEq, Rational(0));
    p.lower[i] = Rational(0);
  }
  const LpResult r = lp_solve(p);
  BalancedResult out;
  if (r.status != LpStatus::Optimal) return out;  // not even weakly balanced
  if (r.x[m].sign() <= 0) return out;
  out.balanced = true;
  out.weights.assign(r.x.begin(), r.x.begin() + m);
  return out;
}

Allocation prenucleolus_lp_oracle(const TuGame& v) {
  const int n = v.n();
  Level lv{n, {char_vector(v.grand(), n)}, {v.value(v.grand())}, {}, &v};
  for (std::uint32_t m = 1; m < v.grand().mask(); ++m) lv.free.push_back(Coalition(m));

  SpanBasis span(n);
  span.add(char_vector(v.grand(), n));

  while (span.rank() < n) {
    // Coalitions spanned by the pinned system have constant x(S) on the face
    // and cannot influence deeper levels.
    std::erase_if(lv.free, [&](Coalition s) {
      return span.contains(char_vector(s, n));
    });
    if (lv.free.empty()) {
      throw std::logic_error("prenucleolus oracle: free coalitions exhausted before rank n");
    }
    auto [eps, witness] = solve_level(lv);
    std::vector<Coalition> tight;
    for (Coalition s : lv.free) {
      if (free_excess(lv, s, witness) == eps) tight.push_back(s);
    }
    std::sort(tight.begin(), tight.end(), CoalitionLess{});
    const auto fixed = universally_tight_on_face(lv, eps, std::move(tight));
    if (fixed.empty()) {
      throw std::logic_error("prenucleolus oracle: no universally tight constraint at level");
    }
    for (Coalition s : fixed) {
      lv.eq_lhs.push_back(char_vector(s, n));
      lv.eq_rhs.push_back(v.value(s) - eps);
      span.add(char_vector(s, n));
      std::erase(lv.free, s);
    }
  }
  return solve_unique(lv.eq_lhs, lv.eq_rhs);
}

Allocation reconstruct_from_tight(const TuGame& v,
                                  const std::vector<Coalition>& coalitions,
                                  const Allocation& x) {
  if (coalitions.empty()) {
    throw std::invalid_argument("reconstruct_from_tight: empty coalition stack");
  }
  Mat rows;
  Vec rhs;
  for (Coalition s : coalitions) {
    if (!s.subset_of(v.grand())) {
      throw std::invalid_argument("reconstruct_from_tight: coalition outside the player set");
    }
    rows.push_back(char_vector(s, v.n()));
    rhs.push_back(coalition_sum(x, s));
  }
  return solve_unique(rows, rhs);  // throws on rank deficiency
}

bool kohlberg_top_balanced(const TuGame& v, const Allocation& x) {
  bool have = false;
  Rational best;
  std::vector<Coalition> argmax;
  for (std::uint32_t m = 1; m < v.grand().mask(); ++m) {
    Rational e = excess(v, Coalition(m), x);
    if (!have || e > best) {
      best = std::move(e);
      argmax.assign(1, Coalition(m));
      have = true;
    } else if (e == best) {
      argmax.push_back(Coalition(m));
    }
  }
  return is_balanced_collection(v.n(), argmax).balanced;
}

}  // namespace tugame
