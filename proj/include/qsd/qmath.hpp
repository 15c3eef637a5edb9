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

// Small fixed-dimension complex linear algebra for qubit / qubit-pair objects.
//
// Conventions used throughout the library:
//   basis        |1> = (1,0)^T, |2> = (0,1)^T, sigma_z = diag(1,-1)
//   joint space  system-major ordering |s p>: |11>, |12>, |21>, |22>
//   tolerances   algebraic identities at 1e-12, positivity/Hermiticity
//                gates at 1e-10 (accumulated products are dirtier than
//                single constructions)

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qsd {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;

inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

/// NaN/Inf gate for module boundaries.
template <typename Derived>
void require_finite(const char* what, const Eigen::MatrixBase<Derived>& m) {
  if (!all_finite(m)) {
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
  }
}

inline void require_finite_scalar(const char* what, double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + ": non-finite value");
  }
}

inline Mat2 sigma_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

inline Mat2 sigma_y() {
  Mat2 m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline Mat2 sigma_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

/// Real rotation by +beta that carries |1> to cos(beta)|1> + sin(beta)|2>,
/// i.e. toward the symmetry diagonal of the state pair.
inline Mat2 tilt_rotation(double beta) {
  require_finite_scalar("tilt_rotation", beta);
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  Mat2 m;
  m << c, -s, s, c;
  return m;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = kPositivityTol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol = kAlgebraTol) {
  using Plain = typename Derived::PlainObject;
  const Plain g = m.adjoint() * m;
  return (g - Plain::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

/// Smallest eigenvalue of a (nearly) Hermitian matrix.
template <typename Matrix>
double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

template <typename Matrix>
bool is_positive_semidefinite(const Matrix& m, double tol = kPositivityTol) {
  if (!is_hermitian(m, tol)) return false;
  return min_eigenvalue(m) >= -tol;
}

/// Density-operator gate: Hermitian, unit trace and positive within 1e-10.
template <typename Matrix>
bool is_density(const Matrix& m, double tol = kPositivityTol) {
  if (!all_finite(m)) return false;
  if (!is_hermitian(m, tol)) return false;
  if (std::abs(m.trace().real() - 1.0) > tol || std::abs(m.trace().imag()) > tol) return false;
  return min_eigenvalue(m) >= -tol;
}

template <typename Matrix>
void require_density(const char* what, const Matrix& m) {
  if (!is_density(m)) {
    throw std::invalid_argument(std::string(what) + ": not a valid density operator");
  }
}

/// Kronecker product in system-major ordering |s p>.
inline Mat4 tensor(const Mat2& a, const Mat2& b) {
  require_finite("tensor lhs", a);
  require_finite("tensor rhs", b);
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

namespace detail {

/// Partial trace over the second (probe) tensor factor; no validity gates.
inline Mat2 trace_out_second(const Mat4& m) {
  Mat2 out;
  for (int s = 0; s < 2; ++s)
    for (int sp = 0; sp < 2; ++sp)
      out(s, sp) = m(2 * s, 2 * sp) + m(2 * s + 1, 2 * sp + 1);
  return out;
}

}  // namespace detail

/// Reduce a joint system-probe density operator to the system.
inline Mat2 partial_trace_probe(const Mat4& rho) {
  require_finite("partial_trace_probe", rho);
  require_density("partial_trace_probe", rho);
  return detail::trace_out_second(rho);
}

/// <s|rho|s> for a normalized pure state and a density operator.
template <int N>
double fidelity_pure(const Eigen::Matrix<Complex, N, 1>& state,
                     const Eigen::Matrix<Complex, N, N>& rho) {
  require_finite("fidelity_pure state", state);
  if (std::abs(state.norm() - 1.0) > kAlgebraTol) {
    throw std::invalid_argument("fidelity_pure: state is not normalized");
  }
  require_density("fidelity_pure rho", rho);
  const Complex v = (state.adjoint() * rho * state).value();
  return v.real();
}

/// Square root of a 2x2 Hermitian PSD matrix (closed form via the Bloch
/// decomposition; eigenvalues clamped at zero within the positivity gate).
namespace detail {

inline Mat2 sqrt_bloch(double q, double vx, double vy, double vz) {
  const double r = std::sqrt(vx * vx + vy * vy + vz * vz);
  const double lo = std::max(q - r, 0.0);
  const double hi = std::max(q + r, 0.0);
  const double s = 0.5 * (std::sqrt(hi) + std::sqrt(lo));
  const double u = 0.5 * (std::sqrt(hi) - std::sqrt(lo));
  Mat2 out = s * Mat2::Identity();
  if (r > 1e-15) {
    const double f = u / r;
    Mat2 dir;
    dir << Complex(vz, 0), Complex(vx, -vy), Complex(vx, vy), Complex(-vz, 0);
    out += f * dir;
  }
  return out;
}

}  // namespace detail

inline Mat2 sqrt_hermitian_psd(const Mat2& h) {
  require_finite("sqrt_hermitian_psd", h);
  if (!is_positive_semidefinite(h)) {
    throw std::invalid_argument("sqrt_hermitian_psd: matrix is not Hermitian PSD");
  }
  const double q = 0.5 * (h(0, 0).real() + h(1, 1).real());
  const double vx = h(0, 1).real();
  const double vy = -h(0, 1).imag();
  const double vz = 0.5 * (h(0, 0).real() - h(1, 1).real());
  return detail::sqrt_bloch(q, vx, vy, vz);
}

/// Unitary factor W of the polar decomposition A = W * sqrt(A^dag A),
/// completed arbitrarily on the null space.
inline Mat2 unitary_polar_factor(const Mat2& a) {
  require_finite("unitary_polar_factor", a);
  Eigen::JacobiSVD<Mat2> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace qsd
