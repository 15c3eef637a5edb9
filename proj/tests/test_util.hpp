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

#pragma once

#include "qsd/qmath.hpp"
#include "qsd/rng.hpp"

#include <numbers>

namespace qsd::test {

inline constexpr double kPi = std::numbers::pi;

// Frozen expected values, computed with an independent high-precision oracle
// (plain formula evaluation cross-checked against first-principles channel
// algebra and a constrained numerical minimizer) before the library was
// written.
inline constexpr double kTiltAlphaPi8 = 0.4776583090622546;     // half atan(sqrt 2)
inline constexpr double kTiltAlphaPi12 = 0.2940013017737837;    // half atan(2/3)
inline constexpr double kPoptAlphaPi8 = 0.8535533905932737;     // cos^2(pi/8)
inline constexpr double kSinSqAlphaPi8 = 0.14644660940672624;   // sin^2(pi/8)
inline constexpr double kDoptAlphaPi8 = 0.0669872981077807;     // (2 - sqrt 3)/4
inline constexpr double kProbT05AlphaPi8 = 0.6767766952966369;
inline constexpr double kTiltT05AlphaPi8 = 0.18110907260582904;
inline constexpr double kDistT025AlphaPi8 = 6.30244030935811e-05;
inline constexpr double kDistT05AlphaPi8 = 0.0011230858487688566;
inline constexpr double kDistT075AlphaPi8 = 0.00721609353513947;
// Kerr scheme at phi = pi/2, alpha = pi/8, by feedback mode
inline constexpr double kKerrDNonePhiHalfPi = 0.125;  // exact by algebra
inline constexpr double kKerrDPaperPhiHalfPi = 0.03827480835914854;
inline constexpr double kKerrDOptimizedPhiHalfPi = 0.016900174900409;

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Random mixed state: convex mixture of two random pure states.
inline Mat2 random_density(Rng& rng) {
  auto random_pure = [&rng] {
    Vec2 v(Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
           Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)));
    if (v.norm() < 1e-6) v = Vec2(1.0, 0.0);
    v.normalize();
    return v;
  };
  const Vec2 a = random_pure();
  const Vec2 b = random_pure();
  const double w = rng.uniform01();
  Mat2 rho = w * (a * a.adjoint()) + (1.0 - w) * (b * b.adjoint());
  // exact unit trace despite rounding
  rho /= rho.trace().real();
  return rho;
}

inline Vec2 random_pure_state(Rng& rng) {
  Vec2 v(Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
         Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)));
  if (v.norm() < 1e-6) v = Vec2(1.0, 0.0);
  v.normalize();
  return v;
}

}  // namespace qsd::test
