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

#include <array>

#include "wehrl/spin.hpp"

namespace wehrl {

/// Spin-1 orthonormal basis {|-1>, |chi->, |chi+>} with
///   |chi+> = cos(chi)|1> + sin(chi)|0>,  |chi-> = -sin(chi)|1> + cos(chi)|0>.
struct ChiBasis {
  double chi = 0.0;
  std::array<PureState, 3> states;  // |-1>, |chi->, |chi+>

  const PureState& fixed() const { return states[0]; }
  const PureState& minus() const { return states[1]; }
  const PureState& plus() const { return states[2]; }
};

/// chi in [0, pi/2].
ChiBasis chi_basis(double chi);

struct ZeroCosines {
  double minus = 0.0;  // cos(theta) of the movable zero of |chi->
  double plus = 0.0;   // cos(theta) of the movable zero of |chi+>
};

/// With c = tan(chi): minus = (2 - c^2)/(2 + c^2), plus = (2c^2 - 1)/(2c^2 + 1).
/// The other zero of each state sits at the south pole. chi in (0, pi/2).
ZeroCosines chi_zero_cosines(double chi);

/// Mean Wehrl entropy of the basis from the two-zero closed form.
double mean_entropy_chi(double chi);

struct ChiMinimum {
  double chi = 0.0;
  double entropy = 0.0;
};

/// Golden-section search of mean_entropy_chi over [0, pi/2].
ChiMinimum minimize_chi(double tolerance);

}  // namespace wehrl
