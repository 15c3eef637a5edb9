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

// Closed-form scalars for minimum-disturbance two-state discrimination:
// the Helstrom point, the t-parametrized family P_t / beta_t / D_t, and the
// tradeoff curve. These are the reference values the executable instruments
// are tested against.
//
// Angle branches are fixed with two-argument arctangent so that the doubled
// tilt angle always lies in [0, pi/2]; the degenerate alpha = pi/4 ensemble
// lands on beta = pi/4 by the same branch.

#pragma once

#include "qsd/qmath.hpp"

#include <cmath>
#include <vector>

namespace qsd {

/// The discrimination ensemble: |psi1> = cos(a)|1> + sin(a)|2> and
/// |psi2> = sin(a)|1> + cos(a)|2>, drawn with equal priors. The half-angle
/// a in [0, pi/4] is the single ensemble parameter; the overlap sin(2a) is
/// derived, never stored.
class StatePair {
 public:
  explicit StatePair(double alpha) : alpha_(alpha) {
    require_finite_scalar("StatePair alpha", alpha);
    if (alpha < 0.0 || alpha > kQuarterPi + 1e-15) {
      throw std::domain_error("StatePair: alpha must lie in [0, pi/4]");
    }
  }

  double alpha() const { return alpha_; }
  double overlap() const { return std::sin(2.0 * alpha_); }

  /// alpha = pi/4: the two hypotheses coincide and the tilt is fixed only
  /// by continuity.
  bool degenerate() const { return kQuarterPi - alpha_ <= 1e-12; }

  Vec2 psi1() const { return Vec2(std::cos(alpha_), std::sin(alpha_)); }
  Vec2 psi2() const { return Vec2(std::sin(alpha_), std::cos(alpha_)); }

 private:
  static constexpr double kQuarterPi = 0.785398163397448309616;
  double alpha_;
};

/// One point of the information-disturbance tradeoff curve.
struct TradeoffPoint {
  double t;
  double gamma;
  double beta_t;
  double P;
  double D;
};

inline void require_t(double t) {
  require_finite_scalar("t", t);
  if (t < 0.0 || t > 1.0) throw std::domain_error("t must lie in [0, 1]");
}

inline double gamma_of_t(double t) {
  require_t(t);
  return std::sqrt(1.0 - t * t);
}

/// Best achievable success probability, cos^2(alpha).
inline double helstrom_probability(const StatePair& pair) {
  const double c = std::cos(pair.alpha());
  return c * c;
}

/// Tilt of the states prepared by the least-disturbing Helstrom instrument:
/// tan(2 beta) = tan(2a)/cos(2a), branch 2 beta in [0, pi/2].
inline double helstrom_tilt(const StatePair& pair) {
  const double s2a = std::sin(2.0 * pair.alpha());
  const double c2a = std::cos(2.0 * pair.alpha());
  return 0.5 * std::atan2(s2a, c2a * c2a);
}

/// Disturbance of the least-disturbing Helstrom instrument,
/// (4 - sqrt(14 + 2 cos 8a)) / 8; maximal at a = pi/8.
inline double helstrom_disturbance(const StatePair& pair) {
  return (4.0 - std::sqrt(14.0 + 2.0 * std::cos(8.0 * pair.alpha()))) / 8.0;
}

/// P_t = t cos^2(a) + (1-t)/2.
inline double probability_of_t(const StatePair& pair, double t) {
  require_t(t);
  const double c = std::cos(pair.alpha());
  return t * c * c + (1.0 - t) / 2.0;
}

/// tan(2 beta_t) = t sin(2a) / (cos^2(2a) + gamma sin^2(2a)),
/// branch 2 beta_t in [0, pi/2]. Reduces to helstrom_tilt at t = 1.
inline double tilt_of_t(const StatePair& pair, double t) {
  const double g = gamma_of_t(t);
  const double s2a = std::sin(2.0 * pair.alpha());
  const double c2a = std::cos(2.0 * pair.alpha());
  return 0.5 * std::atan2(t * s2a, c2a * c2a + g * s2a * s2a);
}

/// Least disturbance compatible with success probability P_t.
inline double disturbance_of_t(const StatePair& pair, double t) {
  const double g = gamma_of_t(t);
  const double bt = tilt_of_t(pair, t);
  const double s2a = std::sin(2.0 * pair.alpha());
  const double c4a = std::cos(4.0 * pair.alpha());
  return 0.5 * (1.0 - t * s2a * std::sin(2.0 * bt)) +
         (std::cos(2.0 * bt) / 4.0) * (g * (c4a - 1.0) - c4a - 1.0);
}

/// Inverse of probability_of_t: the t achieving success probability p.
/// For the degenerate alpha = pi/4 ensemble every t gives p = 1/2; t = 0 is
/// returned there.
inline double t_for_probability(const StatePair& pair, double p) {
  require_finite_scalar("p", p);
  const double c2a = std::cos(2.0 * pair.alpha());
  if (c2a < 1e-12) {
    if (std::abs(p - 0.5) > 1e-9) {
      throw std::domain_error("t_for_probability: only P = 1/2 is feasible at alpha = pi/4");
    }
    return 0.0;
  }
  const double t = (2.0 * p - 1.0) / c2a;
  if (t < -1e-9 || t > 1.0 + 1e-9) {
    throw std::domain_error("t_for_probability: P outside [1/2, cos^2 alpha]");
  }
  return std::min(std::max(t, 0.0), 1.0);
}

/// Uniform t-grid over [0, 1] inclusive, each point carrying a consistent
/// (t, gamma, beta_t, P, D) tuple.
inline std::vector<TradeoffPoint> tradeoff_curve(const StatePair& pair, int n_points) {
  if (n_points < 2) throw std::domain_error("tradeoff_curve: n_points must be >= 2");
  std::vector<TradeoffPoint> curve;
  curve.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n_points - 1);
    curve.push_back(TradeoffPoint{t, gamma_of_t(t), tilt_of_t(pair, t),
                                  probability_of_t(pair, t), disturbance_of_t(pair, t)});
  }
  return curve;
}

}  // namespace qsd
