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

#include "tugame/linalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace tugame {

namespace {

// Gauss-Jordan reduction of [A | b]; returns pivot columns. A is modified to
// reduced row-echelon form. Exact rational pivoting, first nonzero pivot.
std::vector<std::size_t> reduce(Mat& a, Vec* b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t rr = r; rr < rows; ++rr) {
      if (!a[rr][c].is_zero()) { p = rr; break; }
    }
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    if (b) std::swap((*b)[r], (*b)[p]);
    const Rational pivot = a[r][c];
    for (auto& x : a[r]) x /= pivot;
    if (b) (*b)[r] /= pivot;
    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || a[rr][c].is_zero()) continue;
      const Rational f = a[rr][c];
      for (std::size_t cc = 0; cc < cols; ++cc) {
        if (!a[r][cc].is_zero()) a[rr][cc] -= f * a[r][cc];
      }
      if (b) (*b)[rr] -= f * (*b)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Mat a) {
  return static_cast<int>(reduce(a, nullptr).size());
}

std::optional<AffineSolutionSet> solve_affine(Mat a, Vec b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  const auto pivots = reduce(a, &b);
  for (std::size_t r = pivots.size(); r < rows; ++r) {
    if (!b[r].is_zero()) return std::nullopt;
  }
  AffineSolutionSet out;
  out.particular.assign(cols, Rational());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    out.particular[pivots[k]] = b[k];
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    Vec z(cols);
    z[fc] = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      z[pivots[k]] = -a[k][fc];
    }
    out.null_basis.push_back(std::move(z));
  }
  return out;
}

Vec min_norm_solution(const Mat& a, const Vec& b) {
  auto sol = solve_affine(a, b);
  if (!sol) throw std::invalid_argument("min_norm_solution: inconsistent system");
  if (sol->null_basis.empty()) return sol->particular;

  // Minimize ||x0 + Z t||^2: solve (Z^T Z) t = -Z^T x0. Z^T Z is positive
  // definite because the null basis columns are independent.
  const auto& zs = sol->null_basis;
  const std::size_t m = zs.size();
  const std::size_t dim = sol->particular.size();
  Mat gram(m, Vec(m));
  Vec rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      Rational dot;
      for (std::size_t k = 0; k < dim; ++k) dot += zs[i][k] * zs[j][k];
      gram[i][j] = dot;
      gram[j][i] = std::move(dot);
    }
    Rational dot;
    for (std::size_t k = 0; k < dim; ++k) dot += zs[i][k] * sol->particular[k];
    rhs[i] = -dot;
  }
  const Vec t = solve_unique(gram, rhs);
  Vec x = sol->particular;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < dim; ++k) x[k] += t[i] * zs[i][k];
  }
  return x;
}

Vec solve_unique(const Mat& a, const Vec& b) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  auto sol = solve_affine(a, b);
  if (!sol) throw std::invalid_argument("solve_unique: inconsistent system");
  if (!sol->null_basis.empty() || sol->particular.size() != cols) {
    throw std::invalid_argument("solve_unique: rank-deficient system");
  }
  return sol->particular;
}

}  // namespace tugame
