// Copyright 2026 The wehrl Authors
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

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace wehrl {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Spin quantum number j, stored as the integer 2j so half-integers are
/// exact. Basis index i corresponds to m = j - i.
class SpinQuantum {
 public:
  explicit SpinQuantum(int two_j);

  int two_j() const noexcept { return two_j_; }
  double j() const noexcept { return 0.5 * two_j_; }
  int dim() const noexcept { return two_j_ + 1; }

  /// Magnetic quantum number of basis index `index`.
  double m(int index) const noexcept { return j() - index; }

  /// Basis index of the state with magnetic number two_m / 2.
  int index_of(int two_m) const;

  friend bool operator==(SpinQuantum, SpinQuantum) = default;

 private:
  int two_j_;
};

/// Point on the unit sphere; theta in [0, pi], phi in [0, 2 pi).
struct SphericalPoint {
  double theta = 0.0;
  double phi = 0.0;

  /// Validates theta and wraps phi into [0, 2 pi).
  static SphericalPoint make(double theta, double phi);

  Eigen::Vector3d unit_vector() const;
  SphericalPoint antipode() const;
};

/// Chord distance between two points of the unit sphere.
double chord_distance(const SphericalPoint& a, const SphericalPoint& b);

struct AngularMomentumOps {
  CMatrix jx;
  CMatrix jy;
  CMatrix jz;
};

AngularMomentumOps build_angular_momentum(SpinQuantum q);

/// Normalized amplitude vector in the |j,m> basis.
class PureState {
 public:
  /// Normalizes `amplitudes`; rejects a zero vector or a dimension mismatch.
  PureState(SpinQuantum q, CVector amplitudes);

  /// |j, m> with m = two_m / 2.
  static PureState jz_eigenstate(SpinQuantum q, int two_m);

  SpinQuantum quantum() const noexcept { return q_; }
  int dim() const noexcept { return q_.dim(); }
  const CVector& amplitudes() const noexcept { return amplitudes_; }

 private:
  SpinQuantum q_;
  CVector amplitudes_;
};

class DensityMatrix {
 public:
  /// Checks hermiticity, unit trace and positivity to 1e-10.
  DensityMatrix(SpinQuantum q, CMatrix rho);

  static DensityMatrix maximally_mixed(SpinQuantum q);
  static DensityMatrix from_pure(const PureState& psi);

  SpinQuantum quantum() const noexcept { return q_; }
  int dim() const noexcept { return q_.dim(); }
  const CMatrix& matrix() const noexcept { return rho_; }

 private:
  SpinQuantum q_;
  CMatrix rho_;
};

/// ln C(n, k) through lgamma.
double log_binomial(int n, int k);

/// SU(2) coherent state |theta, phi>, the north-pole state |j,j> rotated to p.
PureState coherent_state(SpinQuantum q, const SphericalPoint& p);

double husimi_value(const PureState& psi, const SphericalPoint& p);
double husimi_value(const DensityMatrix& rho, const SphericalPoint& p);

/// exp(-i * scale * h) for Hermitian h, through its eigendecomposition.
CMatrix exp_i_hermitian(const CMatrix& h, double scale);

/// exp(-i angle n.J) for a unit axis n.
CMatrix rotation_operator(SpinQuantum q, const Eigen::Vector3d& axis,
                          double angle);

}  // namespace wehrl
