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
#include <string>
#include <vector>

#include "wehrl/entropy.hpp"
#include "wehrl/floquet.hpp"
#include "wehrl/quadrature.hpp"

namespace wehrl {

inline constexpr double kEulerGamma = 0.57721566490153286061;

struct MeanEntropyReport {
  double mean_entropy = 0.0;
  std::vector<double> per_state;
  double baseline_jz = 0.0;
  double baseline_random = 0.0;
  /// Empty at N = 2, where the scaling denominator vanishes.
  std::optional<double> mu;
  /// Set when the eigensystem had degenerate eigenphases; the mean then
  /// depends on the eigenvector choice inside each cluster.
  bool degeneracy_flag = false;
  double max_est_error = 0.0;
};

/// Mean Wehrl entropy of the eigenvectors with baselines and mu. A quadrature
/// failure is rethrown with the state index in the message.
MeanEntropyReport mean_wehrl(const EigenSystem& es,
                             const GridPolicy& policy = {});

/// Mean of the exact |j,m> entropies over m = -j..j.
double mean_s_jz(SpinQuantum q);

/// Average Wehrl entropy of Haar-random pure states, sum_{n=2}^{N} 1/n.
double random_mean_entropy(long n);

/// (s_f - S_Jz) / (<S>_N - S_Jz); throws ErrorCode::kUndefined at N = 2.
double mu_coefficient(double s_f, SpinQuantum q);

/// Local Shannon entropy S_s(alpha) of coherent-state expansion
/// coefficients in the eigenbasis, one value per grid node (row-major,
/// theta rows outer).
struct ShannonField {
  std::vector<double> values;
  QuadratureGrid grid;

  /// (1/N) sum_nodes w S_s; equals the mean Wehrl entropy of the basis.
  double phase_space_average() const;
};

ShannonField shannon_field(const EigenSystem& es, const QuadratureGrid& grid);

/// Arithmetic expression over k for the second kick, e.g. "k/2", "0.5*k",
/// "3". Supports + - * / unary minus, parentheses and numeric literals.
class KPrimeRule {
 public:
  KPrimeRule() : KPrimeRule("k/2") {}
  explicit KPrimeRule(std::string expression);

  double operator()(double k) const;
  const std::string& expression() const noexcept { return expression_; }

 private:
  std::string expression_;
};

struct SweepConfig {
  SpinQuantum q{1};
  double p = 1.7;
  std::vector<double> k_values;
  KPrimeRule k_prime_rule;
  TopModel model = TopModel::kOrthogonal;
  GridPolicy policy = GridPolicy::with_tolerance(1e-7);
  double cluster_tol = 1e-8;
  /// Recorded with the run; the kicked top itself is deterministic.
  std::uint64_t seed = 0;
};

struct SweepRecord {
  double k = 0.0;
  double k_prime = 0.0;
  double mean_wehrl = 0.0;
  std::optional<double> mu;
  bool degenerate = false;
  double max_est_error = 0.0;
  /// Empty on success.
  std::string error;
};

/// One record per k in input order; a failing k is recorded and the sweep
/// continues.
std::vector<SweepRecord> sweep_kicked_top(const SweepConfig& config);

}  // namespace wehrl
