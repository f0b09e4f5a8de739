// Copyright 2026 The isingcn Authors
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

#include "isingcn/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "isingcn/spin_core.hpp"

namespace isingcn {

std::vector<double> Box::clamp(std::vector<double> x) const {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lower[i], upper[i]);
  return x;
}

bool Box::contains(std::span<const double> x) const {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < lower[i] || x[i] > upper[i]) return false;
  }
  return true;
}

NelderMeadResult nelder_mead(const Objective& f, std::vector<std::vector<double>> simplex,
                             const Box& box, const NelderMeadOptions& options) {
  if (simplex.size() < 2) throw InvalidInput("simplex needs at least two vertices");
  const std::size_t n = simplex.size() - 1;
  for (const auto& v : simplex) {
    if (v.size() != n) throw InvalidInput("simplex vertices must have dimension n for n+1 vertices");
  }
  if (box.lower.size() != n || box.upper.size() != n) {
    throw InvalidInput("box dimension does not match simplex");
  }

  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<double> fx(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    simplex[i] = box.clamp(simplex[i]);
    fx[i] = eval(simplex[i]);
  }

  std::vector<std::size_t> order(n + 1);
  bool collapsed = false;
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    {
      std::vector<std::vector<double>> xs(n + 1);
      std::vector<double> fs(n + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        xs[i] = std::move(simplex[order[i]]);
        fs[i] = fx[order[i]];
      }
      simplex = std::move(xs);
      fx = std::move(fs);
    }

    const double spread = fx[n] - fx[0];
    double xdist = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const double scale = std::max(std::abs(simplex[0][k]), 1e-300);
        xdist = std::max(xdist, std::abs(simplex[i][k] - simplex[0][k]) / scale);
      }
    }
    if (spread <= options.f_spread_tol || xdist <= options.x_rel_tol) {
      collapsed = true;
      break;
    }
    // An iteration costs at most n + 2 evaluations (reflect, contract, shrink).
    if (evals + static_cast<int>(n) + 2 > options.max_evaluations) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k];
    }
    for (auto& c : centroid) c /= static_cast<double>(n);

    auto along = [&](double coef) {
      std::vector<double> p(n);
      for (std::size_t k = 0; k < n; ++k) p[k] = centroid[k] + coef * (simplex[n][k] - centroid[k]);
      return box.clamp(std::move(p));
    };

    const auto xr = along(-1.0);
    const double fr = eval(xr);
    if (fr < fx[0]) {
      const auto xe = along(-2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[n] = xe;
        fx[n] = fe;
      } else {
        simplex[n] = xr;
        fx[n] = fr;
      }
      continue;
    }
    if (fr < fx[n - 1]) {
      simplex[n] = xr;
      fx[n] = fr;
      continue;
    }
    if (fr < fx[n]) {
      const auto xc = along(-0.5);
      const double fc = eval(xc);
      if (fc <= fr) {
        simplex[n] = xc;
        fx[n] = fc;
        continue;
      }
    } else {
      const auto xc = along(0.5);
      const double fc = eval(xc);
      if (fc < fx[n]) {
        simplex[n] = xc;
        fx[n] = fc;
        continue;
      }
    }
    // Shrink toward the best vertex.
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        simplex[i][k] = simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]);
      }
      fx[i] = eval(simplex[i]);
    }
  }

  return {simplex[0], fx[0], evals, collapsed};
}

}  // namespace isingcn
