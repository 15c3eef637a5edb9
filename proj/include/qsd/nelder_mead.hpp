// Copyright 2026 The qsd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Derivative-free simplex minimizer (Nelder-Mead with the standard
// reflection/expansion/contraction/shrink coefficients 1, 2, 1/2, 1/2).
// Deterministic: no randomness, evaluation order fixed.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace qsd {

struct NelderMeadOptions {
  long max_evaluations = 10000;
  double x_tolerance = 1e-11;  // simplex diameter
  double f_tolerance = 1e-14;  // value spread
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  long evaluations = 0;
  bool converged = false;  // simplex collapsed below tolerance
};

template <typename F>
NelderMeadResult nelder_mead(F&& f, const std::vector<double>& x0,
                             const std::vector<double>& step,
                             const NelderMeadOptions& opt = {}) {
  const std::size_t n = x0.size();
  NelderMeadResult result;
  result.x = x0;

  long evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  result.value = eval(x0);
  if (n == 0 || opt.max_evaluations <= 1) {
    result.evaluations = evals;
    return result;
  }

  std::vector<std::vector<double>> verts(n + 1, x0);
  std::vector<double> fv(n + 1);
  fv[0] = result.value;
  for (std::size_t i = 0; i < n && evals < opt.max_evaluations; ++i) {
    verts[i + 1][i] += (i < step.size() ? step[i] : 0.1);
    fv[i + 1] = eval(verts[i + 1]);
  }

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
  };

  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  while (evals < opt.max_evaluations) {
    sort_simplex();
    const std::size_t best = order[0], worst = order[n], second = order[n - 1];

    double fspread = std::abs(fv[worst] - fv[best]);
    double xspread = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      xspread = std::max(xspread, std::abs(verts[worst][i] - verts[best][i]));
    if (fspread <= opt.f_tolerance && xspread <= opt.x_tolerance) {
      result.converged = true;
      break;
    }

    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t v = 0; v <= n; ++v)
        if (v != worst) s += verts[v][i];
      centroid[i] = s / static_cast<double>(n);
    }

    for (std::size_t i = 0; i < n; ++i) xr[i] = centroid[i] + (centroid[i] - verts[worst][i]);
    const double fr = eval(xr);

    if (fr < fv[best]) {
      for (std::size_t i = 0; i < n; ++i) xe[i] = centroid[i] + 2.0 * (xr[i] - centroid[i]);
      if (evals >= opt.max_evaluations) {
        verts[worst] = xr;
        fv[worst] = fr;
        break;
      }
      const double fe = eval(xe);
      if (fe < fr) {
        verts[worst] = xe;
        fv[worst] = fe;
      } else {
        verts[worst] = xr;
        fv[worst] = fr;
      }
    } else if (fr < fv[second]) {
      verts[worst] = xr;
      fv[worst] = fr;
    } else {
      const bool outside = fr < fv[worst];
      const std::vector<double>& towards = outside ? xr : verts[worst];
      for (std::size_t i = 0; i < n; ++i) xc[i] = centroid[i] + 0.5 * (towards[i] - centroid[i]);
      if (evals >= opt.max_evaluations) break;
      const double fc = eval(xc);
      if (fc < (outside ? fr : fv[worst])) {
        verts[worst] = xc;
        fv[worst] = fc;
      } else {
        // shrink toward the best vertex
        for (std::size_t v = 0; v <= n && evals < opt.max_evaluations; ++v) {
          if (v == best) continue;
          for (std::size_t i = 0; i < n; ++i)
            verts[v][i] = verts[best][i] + 0.5 * (verts[v][i] - verts[best][i]);
          fv[v] = eval(verts[v]);
        }
      }
    }
  }

  sort_simplex();
  result.x = verts[order[0]];
  result.value = fv[order[0]];
  result.evaluations = evals;
  return result;
}

}  // namespace qsd
