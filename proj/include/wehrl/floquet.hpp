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

#include <cstdint>
#include <optional>
#include <vector>

#include "wehrl/spin.hpp"

namespace wehrl {

enum class TopModel { kOrthogonal, kUnitary };

struct KickedTopParams {
  double p = 0.0;
  double k = 0.0;
  double k_prime = 0.0;  // 0 for the orthogonal top
};

/// One-period unitary map in the |j,m> basis.
class FloquetOperator {
 public:
  /// Checks unitarity to 1e-10 (max-norm of F^dagger F - I).
  FloquetOperator(SpinQuantum q, CMatrix matrix,
                  std::optional<KickedTopParams> params = std::nullopt);

  SpinQuantum quantum() const noexcept { return q_; }
  const CMatrix& matrix() const noexcept { return matrix_; }
  /// Empty for custom and random operators.
  const std::optional<KickedTopParams>& params() const noexcept {
    return params_;
  }

 private:
  SpinQuantum q_;
  CMatrix matrix_;
  std::optional<KickedTopParams> params_;
};

/// max |(F^dagger F - I)_ab|
double unitarity_defect(const CMatrix& f);

/// F_o = exp(-i p J_z) exp(-i k J_x^2 / 2j)
FloquetOperator build_orthogonal_top(SpinQuantum q, double p, double k);

/// F_u = F_o exp(-i k' J_y^2 / 2j)
FloquetOperator build_unitary_top(SpinQuantum q, double p, double k,
                                  double k_prime);

FloquetOperator build_kicked_top(SpinQuantum q, TopModel model,
                                 const KickedTopParams& params);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of diag(R) moved into Q. Deterministic per seed.
FloquetOperator haar_random_unitary(SpinQuantum q, std::uint64_t seed);

/// First column of haar_random_unitary(q, seed): a uniformly random pure
/// state.
PureState haar_random_state(SpinQuantum q, std::uint64_t seed);

struct EigenSystem {
  SpinQuantum q{1};
  /// Ascending, in [0, 2 pi).
  std::vector<double> eigenphases;
  std::vector<PureState> eigenvectors;
  /// Index groups (size >= 2) whose neighbouring eigenphases are closer than
  /// the cluster tolerance on the circle.
  std::vector<std::vector<int>> degeneracy_clusters;
  double max_residual = 0.0;
  double max_overlap = 0.0;

  int dim() const noexcept { return q.dim(); }
  bool degenerate() const noexcept { return !degeneracy_clusters.empty(); }
};

/// Eigenphases and orthonormal eigenvectors. Vectors inside a degeneracy
/// cluster are re-orthonormalized; throws NumericalError when a residual
/// exceeds 1e-9 or distinct eigenvectors overlap by more than 1e-9.
EigenSystem eigendecompose(const FloquetOperator& f, double cluster_tol = 1e-8);

}  // namespace wehrl
