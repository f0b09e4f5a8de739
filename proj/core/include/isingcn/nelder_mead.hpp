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

#ifndef ISINGCN_NELDER_MEAD_HPP_
#define ISINGCN_NELDER_MEAD_HPP_

#include <functional>
#include <span>
#include <vector>

namespace isingcn {

using Objective = std::function<double(std::span<const double>)>;

struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  std::vector<double> clamp(std::vector<double> x) const;
  bool contains(std::span<const double> x) const;
};

struct NelderMeadOptions {
  int max_evaluations = 2000;
  /// Stop once max f - min f over the simplex is at most this.
  double f_spread_tol = 1e-14;
  /// ...or once every vertex is within this relative distance of the best.
  double x_rel_tol = 1e-10;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  int evaluations = 0;
  /// True when the simplex collapsed before the evaluation budget ran out.
  bool collapsed = false;
};

/// Box-constrained Nelder-Mead with the standard coefficients (reflection 1,
/// expansion 2, contraction 1/2, shrink 1/2). Trial points are clamped into
/// the box. Fully deterministic: ties are broken by vertex order.
NelderMeadResult nelder_mead(const Objective& f, std::vector<std::vector<double>> simplex,
                             const Box& box, const NelderMeadOptions& options = {});

}  // namespace isingcn

#endif  // ISINGCN_NELDER_MEAD_HPP_
