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

#include "wehrl/quadrature.hpp"
#include "wehrl/spin.hpp"

namespace wehrl {

/// How wehrl_entropy discretizes the sphere. Zero resolutions mean the
/// default max(64, 4N) per axis. With `adaptive` set, both axes are doubled
/// until successive estimates differ by less than `tol`.
struct GridPolicy {
  int n_theta = 0;
  int n_phi = 0;
  double tol = 1e-9;
  int max_nodes = 4096;
  bool adaptive = true;

  static GridPolicy fixed(int n_theta, int n_phi) {
    return GridPolicy{n_theta, n_phi, 0.0, 4096, false};
  }
  static GridPolicy with_tolerance(double tol) {
    GridPolicy p;
    p.tol = tol;
    return p;
  }
};

struct WehrlResult {
  double entropy = 0.0;
  /// |S(2n) - S(n)| from the last refinement; 0 for a fixed grid.
  double est_error = 0.0;
  int n_theta_used = 0;
  int n_phi_used = 0;
};

WehrlResult wehrl_entropy(const PureState& psi, const GridPolicy& policy = {});
WehrlResult wehrl_entropy(const DensityMatrix& rho,
                          const GridPolicy& policy = {});

/// -sum w H ln H on one fixed grid.
double entropy_on_grid(const PureState& psi, const QuadratureGrid& grid);
double entropy_on_grid(const DensityMatrix& rho, const QuadratureGrid& grid);

/// sum w H on one fixed grid (should be 1).
double husimi_integral(const PureState& psi, const QuadratureGrid& grid);
double husimi_integral(const DensityMatrix& rho, const QuadratureGrid& grid);

/// Exact Wehrl entropy of |j, m>, m = two_m / 2:
///   S = -ln C(2j, k) + k (H_{2j+1} - H_k) + (2j-k) (H_{2j+1} - H_{2j-k})
/// with k = j - m and H_n the harmonic numbers.
double wehrl_jz_closed(SpinQuantum q, int two_m);

/// Lee's closed form for a spin-1 pure state whose two Husimi zeros are
/// separated by the angle omega.
double lee_entropy_two_zero(double omega);

/// Scutaru's form 2/3 + a - ln(1 + a), a = sigma / (2 - sigma); equal to
/// lee_entropy_two_zero.
double scutaru_entropy_two_zero(double omega);

/// x ln x with the removable singularity at 0 (and below 1e-300) set to 0.
inline double xlogx(double x) noexcept {
  return x < 1e-300 ? 0.0 : x * std::log(x);
}

}  // namespace wehrl
