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

// Executable quantum instruments on a qubit: outcome-labelled Kraus
// collections, their POVM, channel application, Choi matrices, and the
// first-principles success-probability / disturbance functionals.
//
// Channels are compared only through Choi matrices; Kraus operators carry a
// phase and mixing gauge that the Choi form quotients out.

#pragma once

#include "qsd/analytic.hpp"
#include "qsd/qmath.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qsd {

struct Outcome {
  int label = 0;
  std::vector<Mat2> kraus;
};

/// An ordered list of outcome-labelled Kraus collections whose POVM is
/// complete: sum_i sum_k E_k^(i)dag E_k^(i) = I within 1e-12. Immutable
/// after construction.
class Instrument {
 public:
  static Instrument from_outcomes(std::vector<Outcome> outcomes) {
    if (outcomes.empty()) throw std::invalid_argument("Instrument: no outcomes");
    Mat2 total = Mat2::Zero();
    for (const Outcome& o : outcomes) {
      if (o.kraus.empty()) {
        throw std::invalid_argument("Instrument: outcome with empty Kraus list");
      }
      for (const Mat2& e : o.kraus) {
        require_finite("Instrument Kraus", e);
        total += e.adjoint() * e;
      }
    }
    for (std::size_t i = 0; i < outcomes.size(); ++i)
      for (std::size_t j = i + 1; j < outcomes.size(); ++j)
        if (outcomes[i].label == outcomes[j].label)
          throw std::invalid_argument("Instrument: duplicate outcome label");
    if ((total - Mat2::Identity()).cwiseAbs().maxCoeff() > kAlgebraTol) {
      throw std::invalid_argument("Instrument: completeness violated beyond 1e-12");
    }
    return Instrument(std::move(outcomes));
  }

  const std::vector<Outcome>& outcomes() const { return outcomes_; }

  bool has_outcome(int label) const {
    for (const Outcome& o : outcomes_)
      if (o.label == label) return true;
    return false;
  }

  const Outcome& outcome(int label) const {
    for (const Outcome& o : outcomes_)
      if (o.label == label) return o;
    throw std::invalid_argument("Instrument: unknown outcome label");
  }

  /// E(rho) for a single outcome's map (not normalized).
  Mat2 apply_map(int label, const Mat2& rho) const {
    const Outcome& o = outcome(label);
    Mat2 out = Mat2::Zero();
    for (const Mat2& e : o.kraus) out += e * rho * e.adjoint();
    return out;
  }

  /// The outcome-summed trace-preserving channel applied to rho.
  Mat2 apply_channel(const Mat2& rho) const {
    Mat2 out = Mat2::Zero();
    for (const Outcome& o : outcomes_)
      for (const Mat2& e : o.kraus) out += e * rho * e.adjoint();
    return out;
  }

 private:
  explicit Instrument(std::vector<Outcome> o) : outcomes_(std::move(o)) {}
  std::vector<Outcome> outcomes_;
};

struct Povm {
  std::vector<Mat2> elements;  // same order as the instrument's outcomes
};

struct ChoiMatrix {
  Mat4 m;
};

/// POVM element i = sum_k E_k^(i)dag E_k^(i).
inline Povm povm_of(const Instrument& instr) {
  Povm p;
  Mat2 total = Mat2::Zero();
  for (const Outcome& o : instr.outcomes()) {
    Mat2 el = Mat2::Zero();
    for (const Mat2& e : o.kraus) el += e.adjoint() * e;
    if (!is_positive_semidefinite(el)) {
      throw std::invalid_argument("povm_of: element not positive within 1e-10");
    }
    total += el;
    p.elements.push_back(el);
  }
  if ((total - Mat2::Identity()).cwiseAbs().maxCoeff() > kAlgebraTol) {
    throw std::invalid_argument("povm_of: completeness violated beyond 1e-12");
  }
  return p;
}

struct OutcomeApplication {
  double probability = 0.0;
  /// Absent when the outcome probability is below 1e-14 and the normalized
  /// posterior state is undefined.
  std::optional<Mat2> post_state;
};

/// Probability Tr[Pi_i rho] and normalized posterior state of one outcome.
inline OutcomeApplication apply_outcome(const Instrument& instr, int label, const Mat2& rho) {
  require_finite("apply_outcome rho", rho);
  require_density("apply_outcome rho", rho);
  const Mat2 unnormalized = instr.apply_map(label, rho);
  const double prob = unnormalized.trace().real();
  OutcomeApplication result;
  result.probability = prob;
  if (prob >= 1e-14) result.post_state = Mat2(unnormalized / prob);
  return result;
}

/// Choi matrix sum_{kl} |k><l| (x) E(|k><l|) of the map defined by a Kraus
/// list; input copy is the first tensor factor, output the second.
inline ChoiMatrix choi_of_kraus(const std::vector<Mat2>& kraus) {
  Mat4 c = Mat4::Zero();
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      Mat2 basis = Mat2::Zero();
      basis(k, l) = 1.0;
      Mat2 out = Mat2::Zero();
      for (const Mat2& e : kraus) out += e * basis * e.adjoint();
      c += tensor(basis, out);
    }
  }
  if (!is_hermitian(c, kAlgebraTol)) {
    throw std::invalid_argument("choi_of_kraus: Choi matrix not Hermitian within 1e-12");
  }
  if (min_eigenvalue(c) < -kPositivityTol) {
    throw std::invalid_argument("choi_of_kraus: Choi matrix not positive within 1e-10");
  }
  return ChoiMatrix{c};
}

/// Choi matrix of the outcome-summed channel; trace-preservation is checked
/// (partial trace over the output factor equals the identity within 1e-12).
inline ChoiMatrix average_channel(const Instrument& instr) {
  std::vector<Mat2> all;
  for (const Outcome& o : instr.outcomes())
    for (const Mat2& e : o.kraus) all.push_back(e);
  ChoiMatrix c = choi_of_kraus(all);
  if ((detail::trace_out_second(c.m) - Mat2::Identity()).cwiseAbs().maxCoeff() > kAlgebraTol) {
    throw std::invalid_argument("average_channel: channel is not trace preserving");
  }
  return c;
}

/// Max-entry absolute difference of Choi matrices; zero iff the channels are
/// identical as maps.
inline double channel_distance(const ChoiMatrix& a, const ChoiMatrix& b) {
  return (a.m - b.m).cwiseAbs().maxCoeff();
}

/// Average success probability (1/2) Tr[Pi_1 psi1] + (1/2) Tr[Pi_2 psi2].
inline double success_probability(const Instrument& instr, const StatePair& pair) {
  if (!instr.has_outcome(1) || !instr.has_outcome(2)) {
    throw std::invalid_argument("success_probability: instrument must have outcomes 1 and 2");
  }
  double p = 0.0;
  const Vec2 states[2] = {pair.psi1(), pair.psi2()};
  for (int i = 0; i < 2; ++i) {
    const Outcome& o = instr.outcome(i + 1);
    for (const Mat2& e : o.kraus) p += 0.5 * (e * states[i]).squaredNorm();
  }
  return p;
}

/// Average disturbance 1 - (1/2) sum_i <psi_i| E(|psi_i><psi_i|) |psi_i>,
/// computed by explicit channel application.
inline double disturbance(const Instrument& instr, const StatePair& pair) {
  double fid = 0.0;
  const Vec2 states[2] = {pair.psi1(), pair.psi2()};
  for (const Vec2& psi : states) {
    const Mat2 rho = psi * psi.adjoint();
    const Mat2 out = instr.apply_channel(rho);
    fid += 0.5 * (psi.adjoint() * out * psi).value().real();
  }
  return 1.0 - fid;
}

/// The measure-and-prepare instrument attaining the Helstrom probability with
/// least disturbance: outcome i measures |i><i| and prepares the tilted state
/// R(beta)|i> (outcome 1) or R(beta)^dag|2> (outcome 2).
inline Instrument helstrom_instrument(const StatePair& pair) {
  const double beta = helstrom_tilt(pair);
  const Mat2 u = tilt_rotation(beta);
  Mat2 p1 = Mat2::Zero();
  p1(0, 0) = 1.0;
  Mat2 p2 = Mat2::Zero();
  p2(1, 1) = 1.0;
  return Instrument::from_outcomes({Outcome{1, {Mat2(u * p1)}}, Outcome{2, {Mat2(u.adjoint() * p2)}}});
}

/// The pure two-outcome instrument achieving the least disturbance at
/// success probability P_t:
///   E1 = R(beta_t) (sqrt(1-g)/2 sigma_z + sqrt(1+g)/2 I),
///   E2 = R(beta_t)^dag (-sqrt(1-g)/2 sigma_z + sqrt(1+g)/2 I),
/// with g = sqrt(1-t^2). Its POVM is {I/2 + (t/2) sigma_z, I/2 - (t/2) sigma_z}.
inline Instrument optimal_instrument(const StatePair& pair, double t) {
  const double g = gamma_of_t(t);
  const double bt = tilt_of_t(pair, t);
  const double lo = std::sqrt(1.0 - g) / 2.0;
  const double hi = std::sqrt(1.0 + g) / 2.0;
  const Mat2 u = tilt_rotation(bt);
  const Mat2 b1 = lo * sigma_z() + hi * Mat2::Identity();
  const Mat2 b2 = -lo * sigma_z() + hi * Mat2::Identity();
  return Instrument::from_outcomes({Outcome{1, {Mat2(u * b1)}}, Outcome{2, {Mat2(u.adjoint() * b2)}}});
}

}  // namespace qsd
