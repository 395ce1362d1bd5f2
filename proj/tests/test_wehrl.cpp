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

#include <doctest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "wehrl/entropy.hpp"
#include "wehrl/error.hpp"
#include "wehrl/quadrature.hpp"
#include "wehrl/stellar.hpp"

using namespace wehrl;
using wehrl::testing::gaussian_state;
using wehrl::testing::uniform_point;

namespace {

const double kLn2 = std::log(2.0);

PureState rotated(const PureState& psi, const Eigen::Vector3d& axis, double angle) {
  return PureState(psi.quantum(), rotation_operator(psi.quantum(), axis, angle) *
                                      psi.amplitudes());
}

// Entropy of an N=3 state from the angle between its two stellar zeros,
// written out independently: sigma = sin^2(w/2).
double two_zero_entropy(double omega) {
  const double s = std::pow(std::sin(omega / 2), 2);
  return (2.0 / 3 + s / 6) / (1 - s / 2) + std::log(1 - s / 2);
}

}  // namespace

TEST_CASE("Gauss-Legendre rule") {
  for (int n : {2, 5, 16, 101}) {
    auto r = gauss_legendre(n);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < 2 * n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
      const double exact = k % 2 == 0 ? 2.0 / (k + 1) : 0.0;
      CHECK(std::abs(s - exact) < 1e-13);
    }
  }
}

TEST_CASE("quadrature grid") {
  SUBCASE("measure normalization") {
    QuadratureGrid g(SpinQuantum(2), 32, 32);
    CHECK(std::abs(g.total_weight() - 3.0) < 1e-12);
    for (int i = 0; i < g.n_theta(); ++i) CHECK(g.row_weight(i) > 0.0);
    CHECK(g.size() == 1024u);
  }
  SUBCASE("husimi of the maximally mixed N=2 state integrates to one") {
    QuadratureGrid g(SpinQuantum(1), 16, 16);
    CHECK(std::abs(husimi_integral(DensityMatrix::maximally_mixed(SpinQuantum(1)), g) -
                   1.0) < 1e-13);
  }
  SUBCASE("identity resolution at N=62") {
    CHECK(identity_resolution_residual(QuadratureGrid(SpinQuantum(61), 256, 256)) < 1e-8);
    // Too coarse to integrate the degree-2j polynomials exactly.
    CHECK(identity_resolution_residual(QuadratureGrid(SpinQuantum(61), 16, 16)) > 1e-3);
  }
  SUBCASE("rejects tiny grids") {
    CHECK_THROWS_AS(QuadratureGrid(SpinQuantum(2), 1, 8), InvalidArgument);
    CHECK_THROWS_AS(QuadratureGrid(SpinQuantum(2), 8, 1), InvalidArgument);
  }
}

TEST_CASE("closed form for J_z eigenstates against the tabulated values") {
  struct Row {
    int two_j;
    int two_m;
    double value;
  };
  const Row rows[] = {
      {1, 1, 0.5},
      {2, 2, 2.0 / 3},
      {2, 0, 5.0 / 3 - kLn2},
      {3, 3, 0.75},
      {3, 1, 9.0 / 4 - std::log(3.0)},
      {4, 4, 0.8},
      {4, 2, 79.0 / 30 - std::log(4.0)},
      {4, 0, 47.0 / 15 - std::log(6.0)},
      {5, 5, 5.0 / 6},
      {5, 3, 35.0 / 12 - std::log(5.0)},
      {5, 1, 15.0 / 4 - std::log(10.0)},
  };
  for (const Row& r : rows) {
    CAPTURE(r.two_j);
    CAPTURE(r.two_m);
    CHECK(std::abs(wehrl_jz_closed(SpinQuantum(r.two_j), r.two_m) - r.value) < 1e-12);
    CHECK(std::abs(wehrl_jz_closed(SpinQuantum(r.two_j), -r.two_m) - r.value) < 1e-12);
  }
  for (int two_j = 1; two_j <= 300; two_j += 7) {
    CHECK(std::abs(wehrl_jz_closed(SpinQuantum(two_j), two_j) -
                   two_j / (two_j + 1.0)) < 1e-12);
  }
  CHECK_THROWS_AS(wehrl_jz_closed(SpinQuantum(2), 1), InvalidArgument);
  CHECK_THROWS_AS(wehrl_jz_closed(SpinQuantum(2), 4), InvalidArgument);
}

TEST_CASE("Wehrl entropy by quadrature") {
  SUBCASE("coherent states") {
    std::mt19937_64 rng(21);
    for (int two_j = 1; two_j <= 12; ++two_j) {
      auto r = wehrl_entropy(coherent_state(SpinQuantum(two_j), uniform_point(rng)));
      CHECK(std::abs(r.entropy - two_j / (two_j + 1.0)) < 1e-8);
      CHECK(r.est_error < 1e-9);
      CHECK(r.n_theta_used >= 64);
    }
  }
  SUBCASE("J_z eigenstates") {
    CHECK(std::abs(wehrl_entropy(PureState::jz_eigenstate(SpinQuantum(2), 0)).entropy -
                   (5.0 / 3 - kLn2)) < 1e-8);
    CHECK(std::abs(wehrl_entropy(PureState::jz_eigenstate(SpinQuantum(4), 2)).entropy -
                   (79.0 / 30 - std::log(4.0))) < 1e-8);
    for (int two_j = 1; two_j <= 5; ++two_j) {
      for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
        auto s = PureState::jz_eigenstate(SpinQuantum(two_j), two_m);
        CHECK(std::abs(wehrl_entropy(s).entropy -
                       wehrl_jz_closed(SpinQuantum(two_j), two_m)) < 1e-8);
      }
    }
  }
  SUBCASE("maximally mixed states") {
    for (int two_j : {1, 2, 9, 61}) {
      auto r = wehrl_entropy(DensityMatrix::maximally_mixed(SpinQuantum(two_j)));
      CHECK(std::abs(r.entropy - std::log(two_j + 1.0)) < 1e-9);
    }
  }
  SUBCASE("diagonal N=2 mixture against the analytic integral") {
    // H(t) = 1/2 + a t on t in [-1, 1]; S = -int h ln h dt.
    for (double p : {0.1, 0.3, 0.77}) {
      CMatrix rho = CMatrix::Zero(2, 2);
      rho(0, 0) = p;
      rho(1, 1) = 1 - p;
      const double a = (2 * p - 1) / 2;
      auto f = [a](double t) {
        const double h = 0.5 + a * t;
        return h * h * std::log(h) / 2 - h * h / 4;
      };
      const double exact = -(f(1.0) - f(-1.0)) / a;
      CHECK(std::abs(wehrl_entropy(DensityMatrix(SpinQuantum(1), rho)).entropy - exact) <
            1e-9);
    }
  }
  SUBCASE("pure and rank one mixed agree") {
    std::mt19937_64 rng(2);
    auto s = gaussian_state(SpinQuantum(6), rng);
    CHECK(std::abs(wehrl_entropy(s).entropy -
                   wehrl_entropy(DensityMatrix::from_pure(s)).entropy) < 1e-8);
  }
  SUBCASE("fixed grid and non-convergence") {
    std::mt19937_64 rng(4);
    auto s = gaussian_state(SpinQuantum(10), rng);
    auto fixed = wehrl_entropy(s, GridPolicy::fixed(64, 64));
    CHECK(fixed.est_error == 0.0);
    CHECK(fixed.n_theta_used == 64);
    GridPolicy tight = GridPolicy::with_tolerance(1e-15);
    tight.max_nodes = 256;
    try {
      wehrl_entropy(s, tight);
      FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
      CHECK(e.code() == ErrorCode::kNotConverged);
      CHECK(std::abs(e.best_estimate() - wehrl_entropy(s).entropy) < 1e-5);
      CHECK(e.est_error() > 0.0);
    }
  }
  SUBCASE("normalization of the Husimi function") {
    std::mt19937_64 rng(8);
    for (int two_j = 1; two_j <= 20; ++two_j) {
      auto s = gaussian_state(SpinQuantum(two_j), rng);
      const int n = std::max(64, 4 * (two_j + 1));
      CHECK(std::abs(husimi_integral(s, QuadratureGrid(s.quantum(), n, n)) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("entropy bounds and invariances on random states") {
  std::mt19937_64 rng(99);
  const GridPolicy policy = GridPolicy::with_tolerance(1e-9);
  SUBCASE("lower bound") {
    for (int two_j = 1; two_j <= 9; ++two_j) {
      double worst = 1e9;
      for (int r = 0; r < 100; ++r) {
        auto s = gaussian_state(SpinQuantum(two_j), rng);
        const double e = wehrl_entropy(s, policy).entropy;
        worst = std::min(worst, e - two_j / (two_j + 1.0));
        CHECK(e <= std::log(two_j + 1.0) + 1e-6);
      }
      CAPTURE(two_j);
      CHECK(worst >= -1e-8);
    }
  }
  SUBCASE("rotation invariance") {
    std::normal_distribution<double> g;
    for (int two_j : {2, 5, 11}) {
      for (int r = 0; r < 5; ++r) {
        auto s = gaussian_state(SpinQuantum(two_j), rng);
        Eigen::Vector3d n(g(rng), g(rng), g(rng));
        const double e0 = wehrl_entropy(s, policy).entropy;
        const double e1 = wehrl_entropy(rotated(s, n.normalized(), 2.1), policy).entropy;
        CHECK(std::abs(e0 - e1) < 1e-8);
      }
    }
  }
  SUBCASE("N=3 entropy from the zero pair angle") {
    for (int r = 0; r < 50; ++r) {
      auto s = gaussian_state(SpinQuantum(2), rng);
      auto z = stellar_zeros(s).expanded();
      REQUIRE(z.size() == 2u);
      const double c = std::clamp(z[0].unit_vector().dot(z[1].unit_vector()), -1.0, 1.0);
      CHECK(std::abs(wehrl_entropy(s, policy).entropy - two_zero_entropy(std::acos(c))) <
            1e-7);
    }
  }
}

TEST_CASE("two-zero entropy formulas") {
  CHECK(std::abs(lee_entropy_two_zero(0.0) - 2.0 / 3) < 1e-15);
  CHECK(std::abs(lee_entropy_two_zero(kPi) - (5.0 / 3 - kLn2)) < 1e-14);
  CHECK(std::abs(lee_entropy_two_zero(std::acos(-1.0 / 3)) - (7.0 / 6 - std::log(1.5))) <
        1e-14);
  CHECK(std::abs(scutaru_entropy_two_zero(0.0) - 2.0 / 3) < 1e-15);
  CHECK(std::abs(scutaru_entropy_two_zero(kPi) - (5.0 / 3 - kLn2)) < 1e-14);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, kPi);
  for (int i = 0; i < 200; ++i) {
    const double w = u(rng);
    CHECK(std::abs(lee_entropy_two_zero(w) - scutaru_entropy_two_zero(w)) < 1e-12);
    CHECK(std::abs(lee_entropy_two_zero(w) - two_zero_entropy(w)) < 1e-14);
  }
}

TEST_CASE("polynomial roots") {
  // (u - 1)(u - 2)(u - i) = u^3 - (3 + i)u^2 + (2 + 3i)u - 2i
  const std::vector<Complex> c = {Complex(0, -2), Complex(2, 3), Complex(-3, -1), 1.0};
  auto r = polynomial_roots(c);
  REQUIRE(r.size() == 3u);
  for (Complex expect : {Complex(1, 0), Complex(2, 0), Complex(0, 1)}) {
    double best = 1e9;
    for (Complex z : r) best = std::min(best, std::abs(z - expect));
    CHECK(best < 1e-12);
  }
}

TEST_CASE("stellar representation") {
  SUBCASE("coherent states have one degenerate antipodal zero") {
    std::mt19937_64 rng(31);
    const SphericalPoint fixed_pts[] = {SphericalPoint::make(0, 0),
                                        SphericalPoint::make(kPi, 0),
                                        SphericalPoint::make(1e-6, 1.0),
                                        SphericalPoint::make(1.0, 2.0)};
    for (int two_j = 1; two_j <= 40; ++two_j) {
      for (int r = 0; r < 5; ++r) {
        const auto p = r < 4 ? fixed_pts[r] : uniform_point(rng);
        auto z = stellar_zeros(coherent_state(SpinQuantum(two_j), p));
        CAPTURE(two_j);
        CAPTURE(r);
        REQUIRE(z.zeros.size() == 1u);
        CHECK(z.zeros[0].multiplicity == two_j);
        CHECK(chord_distance(z.zeros[0].point, p.antipode()) < 1e-6);
      }
    }
    auto z = stellar_zeros(coherent_state(SpinQuantum(4), SphericalPoint::make(1.0, 2.0)));
    CHECK(std::abs(z.zeros[0].point.theta - (kPi - 1.0)) < 1e-7);
    CHECK(std::abs(z.zeros[0].point.phi - (2.0 + kPi)) < 1e-7);
  }
  SUBCASE("J_z eigenstates put their zeros on the poles") {
    for (int two_j = 1; two_j <= 30; ++two_j) {
      for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
        auto z = stellar_zeros(PureState::jz_eigenstate(SpinQuantum(two_j), two_m));
        int south = 0;
        int north = 0;
        for (const auto& s : z.zeros) {
          if (s.point.theta < 1e-9) north += s.multiplicity;
          if (s.point.theta > kPi - 1e-9) south += s.multiplicity;
        }
        CHECK(south == (two_j + two_m) / 2);
        CHECK(north == (two_j - two_m) / 2);
      }
    }
  }
  SUBCASE("random states vanish at their zeros and round-trip") {
    std::mt19937_64 rng(41);
    for (int two_j = 2; two_j <= 9; ++two_j) {
      for (int r = 0; r < 50; ++r) {
        auto s = gaussian_state(SpinQuantum(two_j), rng);
        auto z = stellar_zeros(s);
        CHECK(z.total_multiplicity() == two_j);
        for (const auto& zero : z.zeros) CHECK(husimi_value(s, zero.point) < 1e-10);
        auto back = state_from_zeros(SpinQuantum(two_j), z);
        CHECK(fidelity(s, back) >= 1 - 1e-8);
        CHECK(zero_set_distance(z, stellar_zeros(back)) < 1e-8);
      }
    }
    for (int two_j : {20, 40, 61}) {
      auto s = gaussian_state(SpinQuantum(two_j), rng);
      auto z = stellar_zeros(s);
      CHECK(z.total_multiplicity() == two_j);
      for (const auto& zero : z.zeros) CHECK(husimi_value(s, zero.point) < 1e-10);
    }
  }
  SUBCASE("inverse map examples") {
    StellarZeros poles{{{SphericalPoint::make(0, 0), 1}, {SphericalPoint::make(kPi, 0), 1}}};
    CHECK(fidelity(state_from_zeros(SpinQuantum(2), poles),
                   PureState::jz_eigenstate(SpinQuantum(2), 0)) > 1 - 1e-14);
    StellarZeros triangle;
    for (int i = 0; i < 3; ++i) {
      triangle.zeros.push_back({SphericalPoint::make(kPi / 2, kTwoPi * i / 3), 1});
    }
    auto t = state_from_zeros(SpinQuantum(3), triangle);
    CHECK(std::abs(wehrl_entropy(t).entropy - (21.0 / 8 - 2 * kLn2)) < 1e-7);
    CHECK_THROWS_AS(state_from_zeros(SpinQuantum(4), triangle), InvalidArgument);
  }
  SUBCASE("zero set distance") {
    StellarZeros a{{{SphericalPoint::make(0.5, 0), 2}}};
    StellarZeros b{{{SphericalPoint::make(0.5, 0), 1}}};
    CHECK(std::isinf(zero_set_distance(a, b)));
    CHECK(zero_set_distance(a, a) == 0.0);
  }
}
