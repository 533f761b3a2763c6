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

#include "tugame/game.hpp"

#include <stdexcept>

namespace tugame {

namespace {

void check_shape(int n, const std::vector<Rational>& values, int min_n) {
  if (n < min_n) throw std::invalid_argument("TuGame: too few players");
  if (n > 31) throw std::invalid_argument("TuGame: player count too large for mask representation");
  if (values.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("TuGame: expected 2^n coalition values");
  }
  if (!values[0].is_zero()) {
    throw std::invalid_argument("TuGame: v(empty) must be 0");
  }
}

}  // namespace

TuGame TuGame::from_values(int n, std::vector<Rational> values) {
  check_shape(n, values, 2);
  if (values.back().sign() <= 0) {
    throw std::invalid_argument("TuGame: v(N) must be positive");
  }
  return TuGame(n, std::move(values));
}

TuGame TuGame::unchecked(int n, std::vector<Rational> values) {
  check_shape(n, values, 1);  // reduced games may live on a single player
  return TuGame(n, std::move(values));
}

Rational coalition_sum(const Allocation& x, Coalition s) {
  Rational total;
  for (std::uint32_t m = s.mask(); m != 0; m &= m - 1) {
    total += x[std::countr_zero(m)];
  }
  return total;
}

Rational excess(const TuGame& v, Coalition s, const Allocation& x) {
  return v.value(s) - coalition_sum(x, s);
}

std::vector<Rational> excess_vector(const TuGame& v, const Allocation& x) {
  std::vector<Rational> out;
  out.reserve(v.num_coalitions());
  for (std::uint32_t m = 0; m < v.num_coalitions(); ++m) {
    out.push_back(excess(v, Coalition(m), x));
  }
  return out;
}

Rational indirect_function(const TuGame& v, const Allocation& x) {
  Rational best;  // e(empty) = 0
  for (std::uint32_t m = 1; m < v.num_coalitions(); ++m) {
    Rational e = excess(v, Coalition(m), x);
    if (e > best) best = std::move(e);
  }
  return best;
}

Rational delta_one(const TuGame& v, const Allocation& x) {
  Rational best;
  for (int k = 1; k <= v.n(); ++k) {
    const Coalition rest = Coalition::single(k).complement(v.n());
    for_each_subset(rest, [&](Coalition s) {
      Rational m = (v.value(s | Coalition::single(k)) - v.value(s) - x[k - 1]).abs();
      if (m > best) best = std::move(m);
    });
  }
  return best;
}

bool is_efficient(const TuGame& v, const Allocation& x) {
  return coalition_sum(x, v.grand()) == v.value(v.grand());
}

bool is_imputation(const TuGame& v, const Allocation& x) {
  if (!is_efficient(v, x)) return false;
  for (int k = 1; k <= v.n(); ++k) {
    if (x[k - 1] < v.value(Coalition::single(k))) return false;
  }
  return true;
}

namespace {

bool monotone_values(int n, const std::vector<Rational>& vals) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t t = 1; t <= full; ++t) {
    // every nonempty S subseteq T must satisfy v(S) <= v(T)
    bool ok = true;
    for_each_subset(Coalition(t), [&](Coalition s) {
      if (!s.empty() && vals[s.mask()] > vals[t]) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_monotone(const TuGame& v) { return monotone_values(v.n(), v.values()); }

bool is_superadditive(const TuGame& v) {
  const std::uint32_t full = v.grand().mask();
  for (std::uint32_t s = 0; s <= full; ++s) {
    const Coalition comp = Coalition(s).complement(v.n());
    bool ok = true;
    for_each_subset(comp, [&](Coalition t) {
      if (v.values()[s] + v.value(t) > v.values()[s | t.mask()]) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_convex(const TuGame& v) {
  const std::uint32_t full = v.grand().mask();
  for (std::uint32_t s = 0; s <= full; ++s) {
    for (std::uint32_t t = s; t <= full; ++t) {
      if (v.values()[s] + v.values()[t] > v.values()[s | t] + v.values()[s & t]) {
        return false;
      }
    }
  }
  return true;
}

bool is_zero_monotone(const TuGame& v) {
  std::vector<Rational> zeroed(v.num_coalitions());
  for (std::uint32_t m = 0; m < v.num_coalitions(); ++m) {
    Rational singles;
    for (std::uint32_t b = m; b != 0; b &= b - 1) {
      singles += v.values()[std::uint32_t{1} << std::countr_zero(b)];
    }
    zeroed[m] = v.values()[m] - singles;
  }
  return monotone_values(v.n(), zeroed);
}

std::vector<int> veto_players(const TuGame& v) {
  std::vector<int> out;
  for (int k = 1; k <= v.n(); ++k) {
    bool veto = true;
    const std::uint32_t bit = Coalition::single(k).mask();
    for (std::uint32_t m = 1; m < v.num_coalitions() && veto; ++m) {
      if (!(m & bit) && !v.values()[m].is_zero()) veto = false;
    }
    if (veto) out.push_back(k);
  }
  return out;
}

Allocation shapley_value(const TuGame& v) {
  const int n = v.n();
  std::vector<long> fact(n + 1, 1);
  for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;

  Allocation phi(n);
  for (int k = 1; k <= n; ++k) {
    const Coalition rest = Coalition::single(k).complement(n);
    Rational sum;
    for_each_subset(rest, [&](Coalition s) {
      const int sz = s.size();
      const Rational weight(fact[sz] * fact[n - sz - 1], fact[n]);
      sum += weight * (v.value(s | Coalition::single(k)) - v.value(s));
    });
    phi[k - 1] = std::move(sum);
  }
  return phi;
}

ReducedGame reduced_game(const TuGame& v, Coalition s, const Allocation& x) {
  if (s.empty()) throw std::invalid_argument("reduced_game: S must be nonempty");
  if (!s.subset_of(v.grand())) {
    throw std::invalid_argument("reduced_game: S exceeds the player set");
  }
  const std::vector<int> keep = s.players();
  const int nn = static_cast<int>(keep.size());
  const Coalition outside = s.complement(v.n());

  std::vector<Rational> vals(std::size_t{1} << nn);
  const std::uint32_t full_new = (std::uint32_t{1} << nn) - 1;
  for (std::uint32_t t = 1; t <= full_new; ++t) {
    Coalition told;
    for (int b = 0; b < nn; ++b) {
      if (t >> b & 1) told = told | Coalition::single(keep[b]);
    }
    if (t == full_new) {
      vals[t] = v.value(v.grand()) - coalition_sum(x, outside);
    } else {
      bool first = true;
      Rational best;
      for_each_subset(outside, [&](Coalition q) {
        Rational cand = v.value(told | q) - coalition_sum(x, q);
        if (first || cand > best) {
          best = std::move(cand);
          first = false;
        }
      });
      vals[t] = std::move(best);
    }
  }
  return ReducedGame{TuGame::unchecked(nn, std::move(vals)), keep};
}

}  // namespace tugame
