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
#include "wehrl/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "wehrl/error.hpp"
#include "husimi_rows.hpp"
#include "summation.hpp"

namespace wehrl {
namespace {

template <class Row, class Reduce>
double integrate(const QuadratureGrid& grid, Row&& fill_row, Reduce&& f) {
  RowEvaluator eval(grid);
  std::vector<double> h;
  NeumaierSum total;
  for (int i = 0; i < grid.n_theta(); ++i) {
    fill_row(eval, i, h);
    NeumaierSum row;
    for (double x : h) row.add(f(x));
    total.add(grid.row_weight(i) * row.value());
  }
  return total.value();
}

void check_grid(SpinQuantum q, const QuadratureGrid& grid) {
  if (!(q == grid.quantum())) {
    throw InvalidArgument("quadrature grid was built for a different spin");
  }
}

template <class State>
WehrlResult adaptive_entropy(const State& state, const GridPolicy& policy) {
  const SpinQuantum q = state.quantum();
  const int base = std::max(64, 4 * q.dim());
  int nt = policy.n_theta > 0 ? policy.n_theta : base;
  int np = policy.n_phi > 0 ? policy.n_phi : base;
  if (nt > policy.max_nodes || np > policy.max_nodes) {
    throw InvalidArgument("initial resolution exceeds max_nodes");
  }
  double prev = entropy_on_grid(state, QuadratureGrid(q, nt, np));
  if (!policy.adaptive) return {prev, 0.0, nt, np};
  double diff = 0.0;
  while (true) {
    if (2 * nt > policy.max_nodes || 2 * np > policy.max_nodes) {
      char msg[160];
      std::snprintf(msg, sizeof msg,
                    "Wehrl entropy did not converge to %.3g within %d nodes per "
                    "axis (last change %.3g)",
                    policy.tol, policy.max_nodes, diff);
      throw ConvergenceError(msg, prev, diff);
    }
    nt *= 2;
    np *= 2;
    const double cur = entropy_on_grid(state, QuadratureGrid(q, nt, np));
    diff = std::abs(cur - prev);
    if (diff < policy.tol) return {cur, diff, nt, np};
    prev = cur;
  }
}

double harmonic(int n) {
  NeumaierSum s;
  for (int i = n; i >= 1; --i) s.add(1.0 / i);
  return s.value();
}

}  // namespace

double entropy_on_grid(const PureState& psi, const QuadratureGrid& grid) {
  check_grid(psi.quantum(), grid);
  return -integrate(
      grid,
      [&](RowEvaluator& e, int i, std::vector<double>& h) {
        e.pure_row(psi.amplitudes(), i, h);
      },
      xlogx);
}

double entropy_on_grid(const DensityMatrix& rho, const QuadratureGrid& grid) {
  check_grid(rho.quantum(), grid);
  return -integrate(
      grid,
      [&](RowEvaluator& e, int i, std::vector<double>& h) {
        e.mixed_row(rho.matrix(), i, h);
      },
      xlogx);
}

double husimi_integral(const PureState& psi, const QuadratureGrid& grid) {
  check_grid(psi.quantum(), grid);
  return integrate(
      grid,
      [&](RowEvaluator& e, int i, std::vector<double>& h) {
        e.pure_row(psi.amplitudes(), i, h);
      },
      [](double x) { return x; });
}

double husimi_integral(const DensityMatrix& rho, const QuadratureGrid& grid) {
  check_grid(rho.quantum(), grid);
  return integrate(
      grid,
      [&](RowEvaluator& e, int i, std::vector<double>& h) {
        e.mixed_row(rho.matrix(), i, h);
      },
      [](double x) { return x; });
}

WehrlResult wehrl_entropy(const PureState& psi, const GridPolicy& policy) {
  return adaptive_entropy(psi, policy);
}

WehrlResult wehrl_entropy(const DensityMatrix& rho, const GridPolicy& policy) {
  return adaptive_entropy(rho, policy);
}

double wehrl_jz_closed(SpinQuantum q, int two_m) {
  const int k = q.index_of(two_m);
  const int n = q.two_j();
  const double h_top = harmonic(n + 1);
  return -log_binomial(n, k) + k * (h_top - harmonic(k)) +
         (n - k) * (h_top - harmonic(n - k));
}

double lee_entropy_two_zero(double omega) {
  const double s = std::sin(0.5 * omega);
  const double sigma = s * s;
  const double r = 1.0 - 0.5 * sigma;
  return (2.0 / 3.0 + sigma / 6.0) / r + std::log(r);
}

double scutaru_entropy_two_zero(double omega) {
  const double s = std::sin(0.5 * omega);
  const double sigma = s * s;
  const double a = sigma / (2.0 - sigma);
  return 2.0 / 3.0 + (a - std::log1p(a));
}

}  // namespace wehrl
