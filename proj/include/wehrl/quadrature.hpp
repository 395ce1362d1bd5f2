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

#include <vector>

#include "wehrl/spin.hpp"

namespace wehrl {

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

/// Product rule on the sphere: Gauss-Legendre in t = cos(theta) times the
/// uniform trapezoid in phi. Weights carry the coherent-state measure
/// (2j+1)/(4 pi) sin(theta) dtheta dphi, so they sum to N.
///
/// Nodes are addressed as (row, column) = (theta index, phi index); the list
/// is never materialized because fine grids reach 4096 x 4096.
class QuadratureGrid {
 public:
  QuadratureGrid(SpinQuantum q, int n_theta, int n_phi);

  SpinQuantum quantum() const noexcept { return q_; }
  int n_theta() const noexcept { return static_cast<int>(rule_.nodes.size()); }
  int n_phi() const noexcept { return n_phi_; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(n_theta()) * n_phi_;
  }

  /// cos(theta) of row i.
  double t(int row) const { return rule_.nodes[row]; }
  double phi(int col) const { return kTwoPi * col / n_phi_; }
  SphericalPoint point(int row, int col) const;

  /// Weight of any node in row i (all columns share it).
  double row_weight(int row) const { return row_weights_[row]; }

  double total_weight() const;

 private:
  SpinQuantum q_;
  int n_phi_;
  GaussLegendreRule rule_;
  std::vector<double> row_weights_;
};

/// max |sum_nodes w |alpha><alpha| - I| over matrix elements.
double identity_resolution_residual(const QuadratureGrid& grid);

}  // namespace wehrl
