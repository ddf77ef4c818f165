// Copyright 2026 The Kakeya Authors.
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

#include "kakeya/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "kakeya/error.hpp"
#include "kakeya/tolerances.hpp"

namespace kakeya {

namespace {

// Tableau layout: rows 0..m-1 are constraints, columns 0..K-1 are the
// standard-form variables (x+, x-, slacks, and during phase one the
// auxiliary variable), column K is the right-hand side.  `basis[i]` is the
// variable occupying row i.  `obj` is the reduced-cost row of the current
// minimization objective, with obj[K] = -objective_value.
struct Tableau {
  std::size_t m, k;                   // constraints, variable columns
  std::vector<std::vector<double>> t; // m rows of k+1 entries
  std::vector<double> obj;            // k+1 entries
  std::vector<int> basis;             // m entries
  long pivots = 0;
  long pivot_budget = 0;

  double& at(std::size_t r, std::size_t c) { return t[r][c]; }

  void pivot(std::size_t r, std::size_t s) {
    if (++pivots > pivot_budget)
      throw NumericalFailure("simplex exceeded its pivot budget (" +
                             std::to_string(pivot_budget) + " pivots)");
    double inv = 1.0 / t[r][s];
    for (double& v : t[r]) v *= inv;
    t[r][s] = 1.0;  // kill residual rounding on the pivot element
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      double f = t[i][s];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= k; ++c) t[i][c] -= f * t[r][c];
      t[i][s] = 0.0;
    }
    double f = obj[s];
    if (f != 0.0) {
      for (std::size_t c = 0; c <= k; ++c) obj[c] -= f * t[r][c];
      obj[s] = 0.0;
    }
    basis[r] = static_cast<int>(s);
  }

  // Minimizes the current objective row.  Bland's rule: entering variable is
  // the lowest-index column with a negative reduced cost; the leaving row
  // breaks ratio ties by the lowest basis index.  Returns false when some
  // entering column proves the problem unbounded below.
  bool run(const std::vector<bool>& usable) {
    for (;;) {
      std::size_t enter = k;
      for (std::size_t j = 0; j < k; ++j) {
        if (usable[j] && obj[j] < -kLpEps) {
          enter = j;
          break;
        }
      }
      if (enter == k) return true;  // optimal

      std::size_t leave = m;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) {
        double a = t[i][enter];
        if (a <= kLpEps) continue;
        double ratio = t[i][k] / a;
        if (ratio < best_ratio - 1e-15 ||
            (std::abs(ratio - best_ratio) <= 1e-15 &&
             (leave == m || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave == m) return false;  // unbounded
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
  const std::size_t m = p.normals.size();
  const std::size_t n = p.objective.size();
  if (p.offsets.size() != m)
    throw InvalidParameter("lp: offsets/normals size mismatch");
  if (m == 0 || n == 0) throw InvalidParameter("lp: empty problem");
  for (const Vector& row : p.normals) {
    if (row.size() != n)
      throw InvalidParameter("lp: constraint dimension mismatch");
    for (double v : row)
      if (!std::isfinite(v)) throw InvalidParameter("lp: non-finite data");
  }
  for (double v : p.offsets)
    if (!std::isfinite(v)) throw InvalidParameter("lp: non-finite data");
  for (double v : p.objective)
    if (!std::isfinite(v)) throw InvalidParameter("lp: non-finite data");

  // Standard form over x = u - v, u,v >= 0, with slack variables w:
  //   [A, -A, I] [u; v; w] = b, minimize -c.u + c.v.
  // Column k_aux (present during phase one only) is the auxiliary variable.
  const std::size_t cols = 2 * n + m + 1;  // + auxiliary
  const std::size_t k_aux = 2 * n + m;

  Tableau tb;
  tb.m = m;
  tb.k = cols;
  tb.t.assign(m, std::vector<double>(cols + 1, 0.0));
  tb.obj.assign(cols + 1, 0.0);
  tb.basis.assign(m, 0);
  tb.pivot_budget = 64 * static_cast<long>(m + cols) + 4096;

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      tb.t[i][j] = p.normals[i][j];
      tb.t[i][n + j] = -p.normals[i][j];
    }
    tb.t[i][2 * n + i] = 1.0;
    tb.t[i][k_aux] = -1.0;
    tb.t[i][cols] = p.offsets[i];
    tb.basis[i] = static_cast<int>(2 * n + i);
  }

  std::vector<bool> usable(cols, true);

  // Phase one, only when the all-slack basis is infeasible.
  double min_b = 0.0;
  std::size_t min_row = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (tb.t[i][cols] < min_b) {
      min_b = tb.t[i][cols];
      min_row = i;
    }
  }
  if (min_b < -kLpEps) {
    tb.obj.assign(cols + 1, 0.0);
    tb.obj[k_aux] = 1.0;  // minimize the auxiliary variable
    tb.pivot(min_row, k_aux);
    if (!tb.run(usable))
      throw NumericalFailure("phase-one simplex reported unbounded");
    if (-tb.obj[cols] > 1e-7) {
      LpSolution sol;
      sol.status = LpStatus::infeasible;
      return sol;
    }
    // Drive the auxiliary variable out of the basis if it lingers at zero.
    for (std::size_t i = 0; i < m; ++i) {
      if (tb.basis[i] != static_cast<int>(k_aux)) continue;
      std::size_t s = cols;
      for (std::size_t j = 0; j < k_aux; ++j) {
        if (std::abs(tb.t[i][j]) > kLpEps) {
          s = j;
          break;
        }
      }
      if (s < cols) tb.pivot(i, s);
      // else: the row is all-zero (redundant constraint); harmless.
    }
  }
  usable[k_aux] = false;

  // Phase two: minimize -c.x, pricing the basic columns out of the row.
  tb.obj.assign(cols + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    tb.obj[j] = -p.objective[j];
    tb.obj[n + j] = p.objective[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    int b = tb.basis[i];
    if (b >= 0 && b < static_cast<int>(cols) && tb.obj[b] != 0.0) {
      double f = tb.obj[b];
      for (std::size_t c = 0; c <= cols; ++c) tb.obj[c] -= f * tb.t[i][c];
      tb.obj[static_cast<std::size_t>(b)] = 0.0;
    }
  }

  LpSolution sol;
  if (!tb.run(usable)) {
    sol.status = LpStatus::unbounded;
    return sol;
  }

  Vector x(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    int b = tb.basis[i];
    if (b < 0) continue;
    if (b < static_cast<int>(n))
      x[static_cast<std::size_t>(b)] += tb.t[i][cols];
    else if (b < static_cast<int>(2 * n))
      x[static_cast<std::size_t>(b) - n] -= tb.t[i][cols];
  }
  sol.status = LpStatus::optimal;
  sol.point = std::move(x);
  sol.value = dot(sol.point, p.objective);
  return sol;
}

}  // namespace kakeya
