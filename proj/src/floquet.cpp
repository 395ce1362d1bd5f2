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
#include "wehrl/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "wehrl/error.hpp"

namespace wehrl {
namespace {

constexpr double kUnitarityTol = 1e-10;

// Diagonal phase operator exp(-i p J_z).
CMatrix jz_phase(SpinQuantum q, double p) {
  CVector d(q.dim());
  for (int i = 0; i < q.dim(); ++i) d(i) = std::polar(1.0, -p * q.m(i));
  return d.asDiagonal();
}

// exp(-i k J^2 / 2j) through the eigendecomposition of the component J.
CMatrix torsion(SpinQuantum q, const CMatrix& component, double k) {
  if (k == 0.0) return CMatrix::Identity(q.dim(), q.dim());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(component);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed on angular momentum component");
  }
  const Eigen::VectorXd& d = solver.eigenvalues();
  CVector phases(d.size());
  const double scale = k / (2.0 * q.j());
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    phases(i) = std::polar(1.0, -scale * d(i) * d(i));
  }
  const CMatrix& v = solver.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

double circular_gap(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, kTwoPi - d);
}

}  // namespace

double unitarity_defect(const CMatrix& f) {
  const CMatrix g = f.adjoint() * f - CMatrix::Identity(f.rows(), f.cols());
  return g.cwiseAbs().maxCoeff();
}

FloquetOperator::FloquetOperator(SpinQuantum q, CMatrix matrix,
                                 std::optional<KickedTopParams> params)
    : q_(q), matrix_(std::move(matrix)), params_(params) {
  if (matrix_.rows() != q.dim() || matrix_.cols() != q.dim()) {
    throw InvalidArgument("Floquet matrix has wrong shape");
  }
  if (!matrix_.allFinite()) throw InvalidArgument("Floquet matrix is not finite");
  const double defect = unitarity_defect(matrix_);
  if (defect > kUnitarityTol) {
    throw InvalidArgument("Floquet matrix is not unitary (defect " +
                          std::to_string(defect) + ")");
  }
}

FloquetOperator build_orthogonal_top(SpinQuantum q, double p, double k) {
  if (!std::isfinite(p) || !std::isfinite(k)) {
    throw InvalidArgument("kicked-top parameters must be finite");
  }
  const AngularMomentumOps ops = build_angular_momentum(q);
  CMatrix f = jz_phase(q, p) * torsion(q, ops.jx, k);
  return FloquetOperator(q, std::move(f), KickedTopParams{p, k, 0.0});
}

FloquetOperator build_unitary_top(SpinQuantum q, double p, double k,
                                  double k_prime) {
  if (!std::isfinite(p) || !std::isfinite(k) || !std::isfinite(k_prime)) {
    throw InvalidArgument("kicked-top parameters must be finite");
  }
  const AngularMomentumOps ops = build_angular_momentum(q);
  CMatrix f = jz_phase(q, p) * torsion(q, ops.jx, k) * torsion(q, ops.jy, k_prime);
  return FloquetOperator(q, std::move(f), KickedTopParams{p, k, k_prime});
}

FloquetOperator build_kicked_top(SpinQuantum q, TopModel model,
                                 const KickedTopParams& params) {
  if (model == TopModel::kOrthogonal) {
    return build_orthogonal_top(q, params.p, params.k);
  }
  return build_unitary_top(q, params.p, params.k, params.k_prime);
}

FloquetOperator haar_random_unitary(SpinQuantum q, std::uint64_t seed) {
  const int n = q.dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix z(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(r, c) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix u = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix& packed = qr.matrixQR();
  for (int i = 0; i < n; ++i) {
    const Complex r = packed(i, i);
    const double mag = std::abs(r);
    if (mag > 0.0) u.col(i) *= r / mag;
  }
  return FloquetOperator(q, std::move(u));
}

PureState haar_random_state(SpinQuantum q, std::uint64_t seed) {
  return PureState(q, haar_random_unitary(q, seed).matrix().col(0));
}

EigenSystem eigendecompose(const FloquetOperator& f, double cluster_tol) {
  if (!(cluster_tol >= 0.0)) throw InvalidArgument("cluster_tol must be >= 0");
  const SpinQuantum q = f.quantum();
  const int n = q.dim();
  Eigen::ComplexEigenSolver<CMatrix> solver(f.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericalError("complex eigensolver failed on Floquet operator");
  }
  std::vector<double> phase(n);
  for (int i = 0; i < n; ++i) {
    double a = std::arg(solver.eigenvalues()(i));
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a -= kTwoPi;
    phase[i] = a;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return phase[a] < phase[b]; });

  CMatrix vecs(n, n);
  EigenSystem es;
  es.q = q;
  for (int i = 0; i < n; ++i) {
    es.eigenphases.push_back(phase[order[i]]);
    vecs.col(i) = solver.eigenvectors().col(order[i]).normalized();
  }

  // Clusters of consecutive phases, closing the circle at 2 pi.
  std::vector<int> cluster_id(n);
  int next_id = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && circular_gap(es.eigenphases[i], es.eigenphases[i - 1]) < cluster_tol) {
      cluster_id[i] = cluster_id[i - 1];
    } else {
      cluster_id[i] = next_id++;
    }
  }
  if (n > 1 && cluster_id[n - 1] != cluster_id[0] &&
      circular_gap(es.eigenphases[n - 1], es.eigenphases[0]) < cluster_tol) {
    const int from = cluster_id[n - 1];
    for (int i = 0; i < n; ++i) {
      if (cluster_id[i] == from) cluster_id[i] = cluster_id[0];
    }
  }
  std::vector<std::vector<int>> groups(next_id);
  for (int i = 0; i < n; ++i) groups[cluster_id[i]].push_back(i);
  for (auto& g : groups) {
    if (g.size() < 2) continue;
    // Modified Gram-Schmidt, two passes.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
          const Complex proj = vecs.col(g[b]).dot(vecs.col(g[a]));
          vecs.col(g[a]) -= proj * vecs.col(g[b]);
        }
        vecs.col(g[a]).normalize();
      }
    }
    es.degeneracy_clusters.push_back(g);
  }

  for (int i = 0; i < n; ++i) {
    const Complex lambda = std::polar(1.0, es.eigenphases[i]);
    const double res = (f.matrix() * vecs.col(i) - lambda * vecs.col(i)).norm();
    es.max_residual = std::max(es.max_residual, res);
  }
  const CMatrix gram = vecs.adjoint() * vecs - CMatrix::Identity(n, n);
  es.max_overlap = gram.cwiseAbs().maxCoeff();
  if (es.max_residual > 1e-9 || es.max_overlap > 1e-9) {
    throw NumericalError("eigendecomposition check failed: worst residual " +
                         std::to_string(es.max_residual) + ", worst overlap " +
                         std::to_string(es.max_overlap));
  }
  es.eigenvectors.reserve(n);
  for (int i = 0; i < n; ++i) es.eigenvectors.emplace_back(q, vecs.col(i));
  return es;
}

}  // namespace wehrl
