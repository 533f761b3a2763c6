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

#ifndef TUGAME_TESTS_FIXTURES_HPP
#define TUGAME_TESTS_FIXTURES_HPP

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tugame/game.hpp"

namespace tugame::testing {

// The running four-person convex example: v({1,2}) = v({2,3}) = v({2,3,4}) = 3,
// v({1,2,3}) = v({1,2,4}) = 6, v(N) = 10, 0 otherwise.
inline TuGame example_game() {
  std::vector<Rational> vals(16);
  vals[Coalition::of({1, 2}).mask()] = 3;
  vals[Coalition::of({2, 3}).mask()] = 3;
  vals[Coalition::of({2, 3, 4}).mask()] = 3;
  vals[Coalition::of({1, 2, 3}).mask()] = 6;
  vals[Coalition::of({1, 2, 4}).mask()] = 6;
  vals[15] = 10;
  return TuGame::from_values(4, std::move(vals));
}

inline Allocation example_nucleolus() {
  return {Rational(5, 2), Rational(7, 2), Rational(2), Rational(2)};
}

// The ten related replication games sharing the example's pre-kernel point.
// Column order below is mask order 1..15: {1},{2},{1,2},{3},{1,3},{2,3},
// {1,2,3},{4},{1,4},{2,4},{1,2,4},{3,4},{1,3,4},{2,3,4},N.
inline TuGame related_game(int k) {
  static const char* rows[10][15] = {
      {"-16/27", "-39/46", "272/107", "1/45", "-38/83", "65/27", "271/45", "1/45",
       "-33/79", "-35/52", "271/45", "-3/37", "-47/88", "317/136", "10"},
      {"-21/79", "15/29", "125/31", "3/47", "-28/95", "216/79", "285/47", "3/47",
       "-83/152", "9/38", "285/47", "23/65", "-7/57", "93/32", "10"},
      {"-21/52", "7/52", "381/143", "-23/32", "-50/31", "135/52", "169/32", "-23/32",
       "-96/95", "-17/36", "169/32", "-79/68", "-237/142", "94/37", "10"},
      {"-13/43", "14/139", "169/64", "-9/52", "15/74", "116/43", "303/52", "-9/52",
       "-61/45", "29/53", "303/52", "-7/20", "-6/7", "91/29", "10"},
      {"-13/43", "14/139", "169/64", "-9/52", "15/74", "116/43", "303/52", "-9/52",
       "13/90", "-20/21", "303/52", "-7/20", "9/14", "95/58", "10"},
      {"-13/43", "14/139", "169/64", "-9/52", "15/74", "116/43", "303/52", "-9/52",
       "13/90", "29/53", "303/52", "-7/20", "9/14", "91/29", "10"},
      {"-6/61", "2/61", "273/97", "4/23", "1/48", "177/61", "142/23", "4/23",
       "4/29", "25/93", "142/23", "-81/89", "-19/25", "123/58", "10"},
      {"-6/61", "2/61", "273/97", "4/23", "1/48", "177/61", "142/23", "4/23",
       "4/29", "25/93", "142/23", "23/39", "-19/25", "105/292", "10"},
      {"-6/61", "2/61", "273/97", "4/23", "1/48", "177/61", "142/23", "4/23",
       "4/29", "25/93", "142/23", "23/39", "37/50", "123/58", "10"},
      {"-6/61", "2/61", "273/97", "4/23", "1/48", "177/61", "142/23", "4/23",
       "4/29", "25/93", "142/23", "23/39", "37/50", "105/29", "10"},
  };
  if (k < 1 || k > 10) throw std::out_of_range("related_game: k in 1..10");
  std::vector<Rational> vals(16);
  for (int m = 1; m <= 15; ++m) {
    vals[m] = Rational::from_string(rows[k - 1][m - 1]);
  }
  return TuGame::from_values(4, std::move(vals));
}

inline TuGame two_player_symmetric() {
  std::vector<Rational> vals(4);
  vals[3] = 10;
  return TuGame::from_values(2, std::move(vals));
}

// All pairs and the grand coalition worth 1, singletons 0.
inline TuGame three_player_pairs() {
  std::vector<Rational> vals(8);
  vals[3] = vals[5] = vals[6] = vals[7] = 1;
  return TuGame::from_values(3, std::move(vals));
}

struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::mt19937_64 eng;

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng);
  }
  Rational rational(long lo = -20, long hi = 20, long dmax = 8) {
    return Rational(uniform(lo, hi), uniform(1, dmax));
  }
};

inline Allocation random_allocation(Rng& rng, int n) {
  Allocation x;
  for (int k = 0; k < n; ++k) x.push_back(rng.rational());
  return x;
}

// Arbitrary game with v(empty)=0 and v(N)>0.
inline TuGame random_game(Rng& rng, int n) {
  std::vector<Rational> vals(std::size_t{1} << n);
  for (std::size_t m = 1; m < vals.size(); ++m) vals[m] = rng.rational();
  if (vals.back().sign() <= 0) vals.back() = Rational(rng.uniform(1, 20));
  return TuGame::from_values(n, std::move(vals));
}

// Random supermodular construction: a nonnegative mixture of unanimity games
// (each supermodular, and supermodularity is preserved under nonnegative sums)
// plus an additive measure, which shifts excesses without affecting convexity.
inline TuGame random_convex_game(Rng& rng, int n) {
  while (true) {
    std::vector<Rational> vals(std::size_t{1} << n);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    const int terms = static_cast<int>(rng.uniform(1, 2 * n));
    for (int t = 0; t < terms; ++t) {
      const std::uint32_t seed = static_cast<std::uint32_t>(rng.uniform(1, full));
      const Rational c(rng.uniform(0, 12), rng.uniform(1, 6));
      for (std::uint32_t s = 1; s <= full; ++s) {
        if ((s & seed) == seed) vals[s] += c;
      }
    }
    std::vector<Rational> measure;
    for (int k = 0; k < n; ++k) measure.push_back(rng.rational(-6, 6, 4));
    for (std::uint32_t s = 1; s <= full; ++s) {
      for (int k = 0; k < n; ++k) {
        if (s >> k & 1) vals[s] += measure[k];
      }
    }
    if (vals[full].sign() > 0) return TuGame::from_values(n, std::move(vals));
  }
}

// Imputation with the surplus over the singleton values split at random.
// Requires v(N) >= sum of singleton values (holds for superadditive games).
inline Allocation random_imputation(Rng& rng, const TuGame& v) {
  Rational singles;
  Allocation x;
  for (int k = 1; k <= v.n(); ++k) {
    x.push_back(v.value(Coalition::single(k)));
    singles += x.back();
  }
  const Rational surplus = v.value(v.grand()) - singles;
  if (surplus.sign() < 0) throw std::invalid_argument("no imputation exists");
  std::vector<Rational> w;
  Rational total;
  for (int k = 0; k < v.n(); ++k) {
    w.push_back(Rational(rng.uniform(0, 100)));
    total += w.back();
  }
  if (total.is_zero()) { w[0] = 1; total = 1; }
  for (int k = 0; k < v.n(); ++k) x[k] += surplus * w[k] / total;
  return x;
}

// t*v + additive measure m (strategic equivalence transform).
inline TuGame cov_transform(const TuGame& v, const Rational& t,
                            const std::vector<Rational>& m) {
  std::vector<Rational> vals(v.num_coalitions());
  for (std::uint32_t s = 1; s < v.num_coalitions(); ++s) {
    vals[s] = t * v.values()[s];
    for (int k = 0; k < v.n(); ++k) {
      if (s >> k & 1) vals[s] += m[k];
    }
  }
  return TuGame::unchecked(v.n(), std::move(vals));
}

inline TuGame add_games(const TuGame& a, const TuGame& b) {
  std::vector<Rational> vals(a.num_coalitions());
  for (std::size_t m = 0; m < vals.size(); ++m) {
    vals[m] = a.values()[m] + b.values()[m];
  }
  return TuGame::from_values(a.n(), std::move(vals));
}

}  // namespace tugame::testing

#endif  // TUGAME_TESTS_FIXTURES_HPP
