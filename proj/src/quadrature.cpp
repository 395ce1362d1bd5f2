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
#include "wehrl/quadrature.hpp"

#include <cmath>
#include <string>

#include "wehrl/error.hpp"
#include "summation.hpp"

namespace wehrl {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("Gauss-Legendre order must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int l = 2; l <= n; ++l) {
        const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0;
    double p1 = x;
    for (int l = 2; l <= n; ++l) {
      const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureGrid::QuadratureGrid(SpinQuantum q, int n_theta, int n_phi)
    : q_(q), n_phi_(n_phi) {
  if (n_theta < 2 || n_phi < 2) {
    throw InvalidArgument("quadrature grid needs n_theta >= 2 and n_phi >= 2, got " +
                          std::to_string(n_theta) + " x " +
                          std::to_string(n_phi));
  }
  rule_ = gauss_legendre(n_theta);
  // (2j+1)/(4 pi) * (2 pi / n_phi) * w_gl
  const double factor = q.dim() / (2.0 * n_phi);
  row_weights_.resize(n_theta);
  for (int i = 0; i < n_theta; ++i) row_weights_[i] = factor * rule_.weights[i];
}

SphericalPoint QuadratureGrid::point(int row, int col) const {
  return SphericalPoint{std::acos(t(row)), phi(col)};
}

double QuadratureGrid::total_weight() const {
  NeumaierSum sum;
  for (int i = 0; i < n_theta(); ++i) sum.add(row_weights_[i] * n_phi_);
  return sum.value();
}

double identity_resolution_residual(const QuadratureGrid& grid) {
  const SpinQuantum q = grid.quantum();
  const int n = q.dim();
  CMatrix acc = CMatrix::Zero(n, n);
  CMatrix row_states(n, grid.n_phi());
  for (int i = 0; i < grid.n_theta(); ++i) {
    for (int l = 0; l < grid.n_phi(); ++l) {
      row_states.col(l) = coherent_state(q, grid.point(i, l)).amplitudes();
    }
    acc += grid.row_weight(i) * (row_states * row_states.adjoint());
  }
  return (acc - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace wehrl
