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

#include <doctest.h>

#include "tugame/lp.hpp"

#include "support/fixtures.hpp"

using namespace tugame;
using namespace tugame::testing;

TEST_CASE("one-variable bound") {
  LpProblem p(1);
  p.objective = {Rational(1)};
  p.add_row({Rational(1)}, Relation::GreaterEq, Rational(3));
  const LpResult r = lp_solve(p);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.x == Vec{Rational(3)});
  CHECK(r.value == Rational(3));
}

TEST_CASE("infeasible") {
  LpProblem p(1);
  p.add_row({Rational(1)}, Relation::GreaterEq, Rational(1));
  p.add_row({Rational(1)}, Relation::LessEq, Rational(0));
  CHECK(lp_solve(p).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded") {
  LpProblem p(1);
  p.objective = {Rational(-1)};
  p.add_row({Rational(1)}, Relation::GreaterEq, Rational(0));
  CHECK(lp_solve(p).status == LpStatus::Unbounded);
}

TEST_CASE("equalities and free variables") {
  // min x + y s.t. x - y = 4, x + 2y >= 1 (y free and negative at optimum).
  LpProblem p(2);
  p.objective = {Rational(1), Rational(1)};
  p.add_row({Rational(1), Rational(-1)}, Relation::Eq, Rational(4));
  p.add_row({Rational(1), Rational(2)}, Relation::GreaterEq, Rational(1));
  const LpResult r = lp_solve(p);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.x == Vec{Rational(3), Rational(-1)});
  CHECK(r.value == Rational(2));
}

TEST_CASE("variable bounds") {
  LpProblem p(2);
  p.objective = {Rational(-1), Rational(-1)};  // maximize x + y
  p.lower[0] = Rational(-2);
  p.upper[0] = Rational(5);
  p.lower[1] = Rational(0);
  p.upper[1] = Rational(1, 2);
  const LpResult r = lp_solve(p);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.x == Vec{Rational(5), Rational(1, 2)});
}

TEST_CASE("degenerate pivoting terminates (Beale-style instance)") {
  // A classic cycling-prone LP; Bland's rule must terminate at -1/20.
  LpProblem p(4);
  p.objective = {Rational(-3, 4), Rational(150), Rational(-1, 50), Rational(6)};
  p.add_row({Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)},
            Relation::LessEq, Rational(0));
  p.add_row({Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)},
            Relation::LessEq, Rational(0));
  p.add_row({Rational(0), Rational(0), Rational(1), Rational(0)},
            Relation::LessEq, Rational(1));
  for (int j = 0; j < 4; ++j) p.lower[j] = Rational(0);
  const LpResult r = lp_solve(p);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(-1, 20));
}

TEST_CASE("random LPs satisfy their own constraints at the optimum") {
  Rng rng(81);
  int optimal_seen = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int nv = static_cast<int>(rng.uniform(1, 4));
    const int nr = static_cast<int>(rng.uniform(1, 6));
    LpProblem p(nv);
    for (int j = 0; j < nv; ++j) {
      p.objective[j] = rng.rational(-5, 5, 3);
      p.lower[j] = Rational(rng.uniform(-4, 0));
      p.upper[j] = Rational(rng.uniform(1, 5));
    }
    for (int i = 0; i < nr; ++i) {
      Vec row;
      for (int j = 0; j < nv; ++j) row.push_back(rng.rational(-4, 4, 2));
      const Relation rel = static_cast<Relation>(rng.uniform(0, 2));
      p.add_row(std::move(row), rel, rng.rational(-6, 6, 2));
    }
    const LpResult r = lp_solve(p);  // internal audit throws on a bad optimum
    if (r.status != LpStatus::Optimal) continue;
    ++optimal_seen;
    for (const auto& row : p.rows) {
      Rational lhs;
      for (int j = 0; j < nv; ++j) lhs += row.coeffs[j] * r.x[j];
      if (row.rel == Relation::LessEq) CHECK(lhs <= row.rhs);
      if (row.rel == Relation::GreaterEq) CHECK(lhs >= row.rhs);
      if (row.rel == Relation::Eq) CHECK(lhs == row.rhs);
    }
    for (int j = 0; j < nv; ++j) {
      CHECK(r.x[j] >= *p.lower[j]);
      CHECK(r.x[j] <= *p.upper[j]);
    }
  }
  CHECK(optimal_seen > 10);
}
