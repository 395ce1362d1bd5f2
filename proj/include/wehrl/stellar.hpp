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

struct StellarZero {
  SphericalPoint point;
  int multiplicity = 1;
};

/// The N-1 zeros of the Husimi function of a pure state, counted with
/// multiplicity.
struct StellarZeros {
  std::vector<StellarZero> zeros;

  int total_multiplicity() const;
  /// One entry per zero counted with multiplicity.
  std::vector<SphericalPoint> expanded() const;
};

struct StellarOptions {
  /// Roots closer than this chord distance are always merged.
  double cluster_tol = 1e-7;
  /// Leading polynomial coefficients below this fraction of the largest one
  /// count as missing degree, i.e. zeros at the south pole.
  double deficiency_tol = 1e-13;
  /// Looser merges (companion roots of an m-fold zero scatter like
  /// eps^(1/m)) are accepted only when the Husimi function at the merged
  /// centroid is below this value.
  double merge_husimi_tol = 1e-20;
};

/// Husimi zeros from the roots of p(u) = sum_k psi_k sqrt(C(2j,k)) u^k,
/// u = tan(theta/2) e^{-i phi}; <theta,phi|psi> = cos^{2j}(theta/2) p(u).
/// Roots come from companion-matrix eigenvalues.
StellarZeros stellar_zeros(const PureState& psi,
                           const StellarOptions& options = {});

/// Inverse map: the state, up to global phase, whose Husimi zeros are `zeros`.
PureState state_from_zeros(SpinQuantum q, const StellarZeros& zeros);

/// |<a|b>|^2
double fidelity(const PureState& a, const PureState& b);

/// Largest chord distance after greedy nearest-neighbour matching of the two
/// multisets; infinity when the total multiplicities differ.
double zero_set_distance(const StellarZeros& a, const StellarZeros& b);

/// Roots of sum_k coeffs[k] x^k through the balanced companion matrix.
/// The leading coefficient must be nonzero.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

}  // namespace wehrl
