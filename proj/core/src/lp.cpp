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

#include "tugame/lp.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace tugame {

void LpProblem::add_row(Vec coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != static_cast<std::size_t>(num_vars)) {
    throw std::invalid_argument("LpProblem: row arity mismatch");
  }
  rows.push_back(LpRow{std::move(coeffs), rel, std::move(rhs)});
}

namespace {

// Standard form: min c.z, A z = b, z >= 0, b >= 0. Original free variable j
// maps to z[2j] - z[2j+1]; slack/surplus columns follow, then one artificial
// per row (initial basis).
struct Standardized {
  std::size_t ncols = 0;      // without artificials
  std::size_t nrows = 0;
  Mat a;                      // nrows x ncols
  Vec b;                      // >= 0
  Vec c;                      // ncols
  int orig_vars = 0;
};

Standardized standardize(const LpProblem& p) {
  Standardized s;
  s.orig_vars = p.num_vars;

  std::vector<LpRow> rows = p.rows;
  for (int j = 0; j < p.num_vars; ++j) {
    if (p.lower.size() == static_cast<std::size_t>(p.num_vars) && p.lower[j]) {
      Vec e(p.num_vars);
      e[j] = Rational(1);
      rows.push_back(LpRow{std::move(e), Relation::GreaterEq, *p.lower[j]});
    }
    if (p.upper.size() == static_cast<std::size_t>(p.num_vars) && p.upper[j]) {
      Vec e(p.num_vars);
      e[j] = Rational(1);
      rows.push_back(LpRow{std::move(e), Relation::LessEq, *p.upper[j]});
    }
  }

  s.nrows = rows.size();
  const std::size_t split = static_cast<std::size_t>(2) * p.num_vars;
  std::size_t nslack = 0;
  for (const auto& r : rows) {
    if (r.rel != Relation::Eq) ++nslack;
  }
  s.ncols = split + nslack;
  s.a.assign(s.nrows, Vec(s.ncols));
  s.b.assign(s.nrows, Rational());
  s.c.assign(s.ncols, Rational());
  for (int j = 0; j < p.num_vars; ++j) {
    s.c[2 * j] = p.objective[j];
    s.c[2 * j + 1] = -p.objective[j];
  }

  std::size_t slack_col = split;
  for (std::size_t i = 0; i < s.nrows; ++i) {
    const auto& r = rows[i];
    for (int j = 0; j < p.num_vars; ++j) {
      s.a[i][2 * j] = r.coeffs[j];
      s.a[i][2 * j + 1] = -r.coeffs[j];
    }
    if (r.rel == Relation::LessEq) {
      s.a[i][slack_col++] = Rational(1);
    } else if (r.rel == Relation::GreaterEq) {
      s.a[i][slack_col++] = Rational(-1);
    }
    s.b[i] = r.rhs;
    if (s.b[i].sign() < 0) {
      for (auto& x : s.a[i]) x = -x;
      s.b[i] = -s.b[i];
    }
  }
  return s;
}

// Tableau with maintained cost row. Columns: [structural+slack | artificial],
// last entry of each row is the rhs. cost[j] holds c_j - z_j; optimality at
// cost >= 0 for the admissible columns.
struct Tableau {
  std::size_t ncols = 0;  // structural + slack
  std::size_t nrows = 0;
  Mat t;               // nrows x (ncols + nrows + 1)
  Vec cost;            // ncols + nrows
  Rational cost_rhs;   // -(current objective value)
  std::vector<std::size_t> basis;  // column index per row

  std::size_t width() const { return ncols + nrows; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational pv = t[row][col];
    for (auto& x : t[row]) x /= pv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == row || t[i][col].is_zero()) continue;
      const Rational f = t[i][col];
      for (std::size_t j = 0; j <= width(); ++j) {
        if (!t[row][j].is_zero()) t[i][j] -= f * t[row][j];
      }
    }
    if (!cost[col].is_zero()) {
      const Rational f = cost[col];
      for (std::size_t j = 0; j < width(); ++j) {
        if (!t[row][j].is_zero()) cost[j] -= f * t[row][j];
      }
      cost_rhs -= f * t[row][width()];
    }
    basis[row] = col;
  }

  // Bland: entering = least admissible index with negative reduced cost;
  // leaving = min ratio, ties by least basis variable index.
  enum class Step { Optimal, Unbounded, Pivoted };
  Step step(std::size_t admissible_cols) {
    std::size_t enter = width();
    for (std::size_t j = 0; j < admissible_cols; ++j) {
      if (cost[j].sign() < 0) { enter = j; break; }
    }
    if (enter == width()) return Step::Optimal;
    std::size_t leave = nrows;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      if (leave == nrows) { leave = i; continue; }
      const Rational cur = t[i][width()] * t[leave][enter];
      const Rational prev = t[leave][width()] * t[i][enter];
      if (cur < prev || (cur == prev && basis[i] < basis[leave])) leave = i;
    }
    if (leave == nrows) return Step::Unbounded;
    pivot(leave, enter);
    return Step::Pivoted;
  }
};

void rebuild_cost_row(Tableau& tb, const Vec& c_full) {
  tb.cost.assign(tb.width(), Rational());
  tb.cost_rhs = Rational();
  for (std::size_t j = 0; j < tb.width(); ++j) tb.cost[j] = c_full[j];
  for (std::size_t i = 0; i < tb.nrows; ++i) {
    const Rational cb = c_full[tb.basis[i]];
    if (cb.is_zero()) continue;
    for (std::size_t j = 0; j < tb.width(); ++j) {
      if (!tb.t[i][j].is_zero()) tb.cost[j] -= cb * tb.t[i][j];
    }
    tb.cost_rhs -= cb * tb.t[i][tb.width()];
  }
}

// Exact optimality certificate in standard form. Throws on violation.
void audit_optimal(const Standardized& s, const Vec& z, const Vec& duals,
                   const Rational& value) {
  for (std::size_t j = 0; j < s.ncols; ++j) {
    if (z[j].sign() < 0) throw std::logic_error("lp audit: negative variable");
  }
  Rational dual_obj;
  for (std::size_t i = 0; i < s.nrows; ++i) {
    Rational lhs;
    for (std::size_t j = 0; j < s.ncols; ++j) {
      if (!s.a[i][j].is_zero()) lhs += s.a[i][j] * z[j];
    }
    if (lhs != s.b[i]) throw std::logic_error("lp audit: primal infeasible");
    dual_obj += duals[i] * s.b[i];
  }
  Rational primal_obj;
  for (std::size_t j = 0; j < s.ncols; ++j) {
    Rational red = s.c[j];
    for (std::size_t i = 0; i < s.nrows; ++i) {
      if (!s.a[i][j].is_zero()) red -= duals[i] * s.a[i][j];
    }
    if (red.sign() < 0) throw std::logic_error("lp audit: dual infeasible");
    if (z[j].sign() > 0 && !red.is_zero()) {
      throw std::logic_error("lp audit: complementary slackness violated");
    }
    primal_obj += s.c[j] * z[j];
  }
  if (primal_obj != value || dual_obj != value) {
    throw std::logic_error("lp audit: strong duality violated");
  }
}

}  // namespace

LpResult lp_solve(const LpProblem& p) {
  if (p.num_vars <= 0) throw std::invalid_argument("lp_solve: no variables");
  if (p.objective.size() != static_cast<std::size_t>(p.num_vars)) {
    throw std::invalid_argument("lp_solve: objective arity mismatch");
  }
  const Standardized s = standardize(p);

  Tableau tb;
  tb.ncols = s.ncols;
  tb.nrows = s.nrows;
  tb.t.assign(s.nrows, Vec(tb.width() + 1));
  tb.basis.resize(s.nrows);
  for (std::size_t i = 0; i < s.nrows; ++i) {
    for (std::size_t j = 0; j < s.ncols; ++j) tb.t[i][j] = s.a[i][j];
    tb.t[i][s.ncols + i] = Rational(1);  // artificial
    tb.t[i][tb.width()] = s.b[i];
    tb.basis[i] = s.ncols + i;
  }

  // Phase 1: minimize the sum of artificials.
  Vec c1(tb.width());
  for (std::size_t i = 0; i < s.nrows; ++i) c1[s.ncols + i] = Rational(1);
  rebuild_cost_row(tb, c1);
  while (tb.step(tb.width()) == Tableau::Step::Pivoted) {}
  // Phase-1 objective value = -cost_rhs.
  if (!tb.cost_rhs.is_zero()) {
    return LpResult{LpStatus::Infeasible, {}, {}};
  }
  // Drive artificials out of the basis where possible.
  for (std::size_t i = 0; i < s.nrows; ++i) {
    if (tb.basis[i] < s.ncols) continue;
    std::size_t col = s.ncols;
    for (std::size_t j = 0; j < s.ncols; ++j) {
      if (!tb.t[i][j].is_zero()) { col = j; break; }
    }
    if (col < s.ncols) tb.pivot(i, col);
    // Otherwise the row is redundant; its artificial stays basic at zero,
    // which is harmless for phase 2 and yields dual 0 for that row.
  }

  // Phase 2: artificial columns carry zero cost and are barred from entering.
  Vec c2(tb.width());
  for (std::size_t j = 0; j < s.ncols; ++j) c2[j] = s.c[j];
  rebuild_cost_row(tb, c2);
  while (true) {
    const auto st = tb.step(s.ncols);
    if (st == Tableau::Step::Optimal) break;
    if (st == Tableau::Step::Unbounded) {
      return LpResult{LpStatus::Unbounded, {}, {}};
    }
  }

  Vec z(s.ncols);
  for (std::size_t i = 0; i < s.nrows; ++i) {
    if (tb.basis[i] < s.ncols) z[tb.basis[i]] = tb.t[i][tb.width()];
  }
  // Duals from the artificial columns: y_i = -cost[artificial_i] since the
  // artificial block of A is the identity and its phase-2 costs are zero.
  Vec duals(s.nrows);
  for (std::size_t i = 0; i < s.nrows; ++i) duals[i] = -tb.cost[s.ncols + i];

  const Rational value = -tb.cost_rhs;
  audit_optimal(s, z, duals, value);

  Vec x(p.num_vars);
  for (int j = 0; j < p.num_vars; ++j) {
    x[j] = z[2 * j] - z[2 * j + 1];
  }
  return LpResult{LpStatus::Optimal, std::move(x), value};
}

}  // namespace tugame
