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
#include "wehrl/minima.hpp"

#include <cmath>

#include "wehrl/entropy.hpp"
#include "wehrl/error.hpp"

namespace wehrl {
namespace {

void check_range(double chi) {
  if (!(chi >= 0.0 && chi <= 0.5 * kPi)) {
    throw InvalidArgument("chi must lie in [0, pi/2]");
  }
}

PureState spin1(Complex a1, Complex a0, Complex am1) {
  CVector v(3);
  v << a1, a0, am1;
  return PureState(SpinQuantum(2), std::move(v));
}

// Cosines in terms of cos and sin so the endpoints stay finite.
double cos_zero_minus(double chi) {
  const double c2 = std::cos(chi) * std::cos(chi);
  const double s2 = std::sin(chi) * std::sin(chi);
  return (2.0 * c2 - s2) / (2.0 * c2 + s2);
}

double cos_zero_plus(double chi) {
  const double c2 = std::cos(chi) * std::cos(chi);
  const double s2 = std::sin(chi) * std::sin(chi);
  return (2.0 * s2 - c2) / (2.0 * s2 + c2);
}

// Lee's formula with cos(omega) given directly.
double two_zero_entropy_cos(double cos_omega) {
  const double sigma = 0.5 * (1.0 - cos_omega);
  const double r = 1.0 - 0.5 * sigma;
  return (2.0 / 3.0 + sigma / 6.0) / r + std::log(r);
}

}  // namespace

ChiBasis chi_basis(double chi) {
  check_range(chi);
  const double c = std::cos(chi);
  const double s = std::sin(chi);
  return ChiBasis{chi,
                  {spin1(0.0, 0.0, 1.0), spin1(-s, c, 0.0), spin1(c, s, 0.0)}};
}

ZeroCosines chi_zero_cosines(double chi) {
  if (!(chi > 0.0 && chi < 0.5 * kPi)) {
    throw InvalidArgument("chi_zero_cosines needs chi in (0, pi/2)");
  }
  const double c2 = std::tan(chi) * std::tan(chi);
  return {(2.0 - c2) / (2.0 + c2), (2.0 * c2 - 1.0) / (2.0 * c2 + 1.0)};
}

double mean_entropy_chi(double chi) {
  check_range(chi);
  // |-1> is coherent (2/3). The other two states each have one zero at the
  // south pole, so the angle omega between their zeros has
  // cos(omega) = -cos(theta).
  const double s_minus = two_zero_entropy_cos(-cos_zero_minus(chi));
  const double s_plus = two_zero_entropy_cos(-cos_zero_plus(chi));
  return (2.0 / 3.0 + s_minus + s_plus) / 3.0;
}

ChiMinimum minimize_chi(double tolerance) {
  if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be > 0");
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 0.0;
  double b = 0.5 * kPi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = mean_entropy_chi(x1);
  double f2 = mean_entropy_chi(x2);
  while (b - a > tolerance) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = mean_entropy_chi(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = mean_entropy_chi(x2);
    }
  }
  const double chi = 0.5 * (a + b);
  return {chi, mean_entropy_chi(chi)};
}

}  // namespace wehrl
