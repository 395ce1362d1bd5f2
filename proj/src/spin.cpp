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
#include "wehrl/spin.hpp"

#include <cmath>
#include <string>

#include "wehrl/error.hpp"

namespace wehrl {

SpinQuantum::SpinQuantum(int two_j) : two_j_(two_j) {
  if (two_j < 1) {
    throw InvalidArgument("two_j must be >= 1 (dimension N >= 2), got " +
                          std::to_string(two_j));
  }
}

int SpinQuantum::index_of(int two_m) const {
  if (two_m > two_j_ || two_m < -two_j_ || (two_j_ - two_m) % 2 != 0) {
    throw InvalidArgument("invalid m = " + std::to_string(two_m) +
                          "/2 for two_j = " + std::to_string(two_j_));
  }
  return (two_j_ - two_m) / 2;
}

SphericalPoint SphericalPoint::make(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi) || theta < 0.0 ||
      theta > kPi) {
    throw InvalidArgument("theta must lie in [0, pi], phi must be finite");
  }
  double wrapped = std::fmod(phi, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return {theta, wrapped};
}

Eigen::Vector3d SphericalPoint::unit_vector() const {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

SphericalPoint SphericalPoint::antipode() const {
  return make(kPi - theta, phi + kPi);
}

double chord_distance(const SphericalPoint& a, const SphericalPoint& b) {
  return (a.unit_vector() - b.unit_vector()).norm();
}

AngularMomentumOps build_angular_momentum(SpinQuantum q) {
  const int n = q.dim();
  const double j = q.j();
  CMatrix jplus = CMatrix::Zero(n, n);
  CMatrix jz = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double m = q.m(i);
    jz(i, i) = m;
    // J+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>, and m+1 sits at index i-1.
    if (i > 0) jplus(i - 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const CMatrix jminus = jplus.adjoint();
  AngularMomentumOps ops;
  ops.jx = 0.5 * (jplus + jminus);
  ops.jy = Complex(0.0, -0.5) * (jplus - jminus);
  ops.jz = jz;
  return ops;
}

PureState::PureState(SpinQuantum q, CVector amplitudes)
    : q_(q), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != q.dim()) {
    throw InvalidArgument("amplitude vector has length " +
                          std::to_string(amplitudes_.size()) +
                          ", expected " + std::to_string(q.dim()));
  }
  const double norm = amplitudes_.norm();
  if (!std::isfinite(norm) || norm == 0.0) {
    throw InvalidArgument("state vector must be nonzero and finite");
  }
  amplitudes_ /= norm;
}

PureState PureState::jz_eigenstate(SpinQuantum q, int two_m) {
  CVector v = CVector::Zero(q.dim());
  v(q.index_of(two_m)) = 1.0;
  return PureState(q, std::move(v));
}

DensityMatrix::DensityMatrix(SpinQuantum q, CMatrix rho)
    : q_(q), rho_(std::move(rho)) {
  constexpr double kTol = 1e-10;
  if (rho_.rows() != q.dim() || rho_.cols() != q.dim()) {
    throw InvalidArgument("density matrix has wrong shape");
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kTol) {
    throw InvalidArgument("density matrix is not Hermitian");
  }
  if (std::abs(rho_.trace() - Complex(1.0)) > kTol) {
    throw InvalidArgument("density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho_,
                                                Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed on density matrix");
  }
  if (solver.eigenvalues().minCoeff() < -kTol) {
    throw InvalidArgument("density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(SpinQuantum q) {
  return DensityMatrix(q, CMatrix::Identity(q.dim(), q.dim()) / q.dim());
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.quantum(),
                       psi.amplitudes() * psi.amplitudes().adjoint());
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
         std::lgamma(n - k + 1.0);
}

PureState coherent_state(SpinQuantum q, const SphericalPoint& p) {
  const int n = q.two_j();
  const double s = std::sin(0.5 * p.theta);
  const double c = std::cos(0.5 * p.theta);
  const double log_s = std::log(s);
  const double log_c = std::log(c);
  CVector v(q.dim());
  for (int k = 0; k <= n; ++k) {
    // sin^k cos^(n-k) with 0^0 = 1 at the poles.
    double log_mag = 0.5 * log_binomial(n, k);
    if (k > 0) log_mag += k * log_s;
    if (n - k > 0) log_mag += (n - k) * log_c;
    const double mag = std::exp(log_mag);
    v(k) = std::polar(mag, k * p.phi);
  }
  return PureState(q, std::move(v));
}

double husimi_value(const PureState& psi, const SphericalPoint& p) {
  const CVector alpha = coherent_state(psi.quantum(), p).amplitudes();
  return std::norm(psi.amplitudes().dot(alpha));
}

double husimi_value(const DensityMatrix& rho, const SphericalPoint& p) {
  const CVector alpha = coherent_state(rho.quantum(), p).amplitudes();
  const Complex h = alpha.dot(rho.matrix() * alpha);
  return std::max(0.0, h.real());
}

CMatrix exp_i_hermitian(const CMatrix& h, double scale) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver failed");
  }
  const Eigen::VectorXd& d = solver.eigenvalues();
  CVector phases(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    phases(i) = std::polar(1.0, -scale * d(i));
  }
  const CMatrix& v = solver.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

CMatrix rotation_operator(SpinQuantum q, const Eigen::Vector3d& axis,
                          double angle) {
  const double len = axis.norm();
  if (!(len > 0.0)) throw InvalidArgument("rotation axis must be nonzero");
  const Eigen::Vector3d n = axis / len;
  const AngularMomentumOps ops = build_angular_momentum(q);
  const CMatrix generator = n.x() * ops.jx + n.y() * ops.jy + n.z() * ops.jz;
  return exp_i_hermitian(generator, angle);
}

}  // namespace wehrl
