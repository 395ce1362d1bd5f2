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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wehrl/chaos.hpp"
#include "wehrl/entropy.hpp"
#include "wehrl/floquet.hpp"
#include "wehrl/minima.hpp"
#include "wehrl/quadrature.hpp"
#include "wehrl/stellar.hpp"

using namespace wehrl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

// Smallest entropy margin above (N-1)/N seen anywhere in the run.
double g_lieb_margin = 1e300;
long g_lieb_count = 0;

double tracked_entropy(const PureState& s, const GridPolicy& p) {
  const double e = wehrl_entropy(s, p).entropy;
  const double n = s.dim();
  g_lieb_margin = std::min(g_lieb_margin, e - (n - 1) / n);
  ++g_lieb_count;
  return e;
}

double harmonic_tail(int n) {
  double s = 0.0;
  for (int i = n; i >= 2; --i) s += 1.0 / i;
  return s;
}

Outcome c1_jz_table() {
  const auto t0 = Clock::now();
  const double ln = std::log(2.0);
  struct Row {
    int two_j, two_m;
    double v;
  };
  const Row states[] = {
      {1, 1, 0.5},
      {2, 2, 2.0 / 3},
      {2, 0, 5.0 / 3 - ln},
      {3, 3, 0.75},
      {3, 1, 9.0 / 4 - std::log(3.0)},
      {4, 4, 0.8},
      {4, 2, 79.0 / 30 - std::log(4.0)},
      {4, 0, 47.0 / 15 - std::log(6.0)},
      {5, 5, 5.0 / 6},
      {5, 3, 35.0 / 12 - std::log(5.0)},
      {5, 1, 15.0 / 4 - std::log(10.0)},
  };
  const double means[] = {0.5, 1 - ln / 3, 1.5 - std::log(3.0) / 2, 2 - std::log(96.0) / 5,
                          2.5 - std::log(50.0) / 3};
  double closed_err = 0.0;
  double quad_err = 0.0;
  for (const Row& r : states) {
    const SpinQuantum q(r.two_j);
    closed_err = std::max(closed_err, std::abs(wehrl_jz_closed(q, r.two_m) - r.v));
    const double e = tracked_entropy(PureState::jz_eigenstate(q, r.two_m), {});
    quad_err = std::max(quad_err, std::abs(e - r.v));
  }
  for (int two_j = 1; two_j <= 5; ++two_j) {
    const SpinQuantum q(two_j);
    closed_err = std::max(closed_err, std::abs(mean_s_jz(q) - means[two_j - 1]));
    double s = 0.0;
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      s += tracked_entropy(PureState::jz_eigenstate(q, two_m), {});
    }
    quad_err = std::max(quad_err, std::abs(s / (two_j + 1) - means[two_j - 1]));
  }
  const double t = seconds_since(t0);
  return {closed_err < 1e-12 && quad_err < 1e-8 && t < 5.0,
          fmt("11 states + 5 means; closed max err %.2e (<1e-12), quadrature max err %.2e "
              "(<1e-8), %.2f s (<5 s)",
              closed_err, quad_err, t)};
}

Outcome c2_coherent() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int n = 2; n <= 20; ++n) {
    for (int r = 0; r < 5; ++r) {
      const auto p = SphericalPoint::make(std::acos(1 - 2 * u(rng)), kTwoPi * u(rng));
      const double e = tracked_entropy(coherent_state(SpinQuantum(n - 1), p), {});
      worst = std::max(worst, std::abs(e - (n - 1.0) / n));
    }
  }
  return {worst < 1e-8, fmt("N=2..20 x 5 points; max |S - (N-1)/N| = %.2e (<1e-8)", worst)};
}

Outcome c3_mixed() {
  double worst = 0.0;
  for (int n : {2, 3, 10, 62}) {
    const double e = wehrl_entropy(DensityMatrix::maximally_mixed(SpinQuantum(n - 1))).entropy;
    worst = std::max(worst, std::abs(e - std::log(n)));
  }
  return {worst < 1e-9, fmt("N in {2,3,10,62}; max |S - ln N| = %.2e (<1e-9)", worst)};
}

Outcome c4_random_mean() {
  bool ok = true;
  std::string detail;
  for (int n : {3, 8, 62}) {
    const SpinQuantum q(n - 1);
    const GridPolicy p = GridPolicy::with_tolerance(n == 62 ? 1e-6 : 1e-7);
    const int samples = 2000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double e = tracked_entropy(haar_random_state(q, 700000 + i), p);
      sum += e;
      sq += e * e;
    }
    const double mean = sum / samples;
    const double se = std::sqrt((sq - samples * mean * mean) / (samples - 1) / samples);
    const double exact = random_mean_entropy(n);
    const double z = (mean - exact) / se;
    ok = ok && std::abs(z) < 3 && std::abs(exact - harmonic_tail(n)) < 1e-13;
    detail += fmt("N=%d z=%+.2f; ", n, z);
  }
  const double e62 = random_mean_entropy(62);
  const bool quoted = std::abs(std::round(e62 * 1000) / 1000 - 3.712) < 1e-12;
  ok = ok && quoted;
  return {ok, detail + fmt("exact N=62 %.6f rounds to 3.712: %s", e62, quoted ? "yes" : "no")};
}

Outcome c5_triangle() {
  StellarZeros z;
  for (int i = 0; i < 3; ++i) z.zeros.push_back({SphericalPoint::make(kPi / 2, kTwoPi * i / 3), 1});
  const double e = tracked_entropy(state_from_zeros(SpinQuantum(3), z), {});
  const double expect = 21.0 / 8 - 2 * std::log(2.0);
  return {std::abs(e - expect) < 1e-7,
          fmt("S = %.10f, expected %.10f, err %.2e (<1e-7)", e, expect, std::abs(e - expect))};
}

Outcome c6_spin1_minimum() {
  const ChiMinimum m = minimize_chi(1e-8);
  const double ref = 1 - std::log(9.0 / 4) / 3;
  const double sjz = 1 - std::log(2.0) / 3;
  const bool ok = std::abs(m.chi - kPi / 4) < 1e-6 && std::abs(m.entropy - ref) < 1e-9 &&
                  m.entropy < sjz;
  return {ok, fmt("chi* - pi/4 = %.2e (<1e-6), S* - ref = %.2e (<1e-9), S* = %.10f < %.10f", m.chi - kPi / 4,
                  m.entropy - ref, m.entropy, sjz)};
}

Outcome c7_two_zero() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, kPi);
  double ident = 0.0;
  double quad = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double w = u(rng);
    ident = std::max(ident, std::abs(lee_entropy_two_zero(w) - scutaru_entropy_two_zero(w)));
    StellarZeros z{{{SphericalPoint::make(0.0, 0.0), 1}, {SphericalPoint::make(w, 0.3), 1}}};
    const double e = tracked_entropy(state_from_zeros(SpinQuantum(2), z), {});
    quad = std::max(quad, std::max(std::abs(e - lee_entropy_two_zero(w)),
                                   std::abs(e - scutaru_entropy_two_zero(w))));
  }
  return {ident < 1e-12 && quad < 1e-7,
          fmt("200 angles; |lee - scutaru| max %.2e (<1e-12), vs quadrature max %.2e (<1e-7)",
              ident, quad)};
}

Outcome c8_unperturbed() {
  const auto t0 = Clock::now();
  const SpinQuantum q(61);
  const double closed = mean_s_jz(q);
  const MeanEntropyReport r = mean_wehrl(eigendecompose(build_orthogonal_top(q, 1.7, 0.0)));
  const double t = seconds_since(t0);
  const bool ok = std::abs(closed - 2.465) <= 0.005 && std::abs(r.mean_entropy - closed) < 1e-7 &&
                  t < 30.0;
  return {ok, fmt("closed %.6f, quadrature %.6f (target 2.465 +- 0.005), %.2f s (<30 s)",
                  closed, r.mean_entropy, t)};
}

Outcome c9_phase_space_identity() {
  double worst = 0.0;
  std::string detail;
  const EigenSystem systems[] = {eigendecompose(haar_random_unitary(SpinQuantum(7), 9)),
                                 eigendecompose(build_orthogonal_top(SpinQuantum(21), 1.7, 8.0))};
  for (const EigenSystem& es : systems) {
    const double mean = mean_wehrl(es).mean_entropy;
    const double avg = shannon_field(es, QuadratureGrid(es.q, 1024, 1024)).phase_space_average();
    worst = std::max(worst, std::abs(avg - mean));
    detail += fmt("N=%d diff %.2e; ", es.dim(), avg - mean);
  }
  return {worst < 1e-5, detail + "tolerance 1e-5"};
}

Outcome c10_chaos_transition() {
  const auto t0 = Clock::now();
  const SpinQuantum q(61);
  const GridPolicy p = GridPolicy::with_tolerance(1e-7);
  auto orth = [&](double k) { return mean_wehrl(eigendecompose(build_orthogonal_top(q, 1.7, k)), p); };
  const MeanEntropyReport r0 = orth(0.0);
  const MeanEntropyReport r05 = orth(0.5);
  const MeanEntropyReport r8 = orth(8.0);
  const MeanEntropyReport u8 = mean_wehrl(eigendecompose(build_unitary_top(q, 1.7, 8.0, 4.0)), p);
  const double mu0 = *r0.mu;
  const double mu05 = *r05.mu;
  const double mu8 = *r8.mu;
  const double mu8u = *u8.mu;
  auto range = [](const MeanEntropyReport& r) {
    return std::pair(*std::min_element(r.per_state.begin(), r.per_state.end()),
                     *std::max_element(r.per_state.begin(), r.per_state.end()));
  };
  const auto [lo05, hi05] = range(r05);
  const auto [lo8, hi8] = range(r8);
  // Example eigenstate entropies 2.77 and 2.66 (regular), 3.72 and 3.80 (chaotic)
  // must fall inside the computed spreads.
  const bool regular_ok = lo05 <= 2.66 && hi05 >= 2.77 && hi05 <= 2.9;
  const bool chaotic_ok = lo8 <= 3.72 && hi8 >= 3.80;
  const double t = seconds_since(t0);
  const bool ok = std::abs(mu0) <= 1e-6 && mu05 < 0.3 && mu8 >= 0.7 && mu8 <= 1.0 &&
                  mu8u >= 0.85 && mu8u <= 1.05 && mu8u > mu8 && regular_ok && chaotic_ok &&
                  !r05.degeneracy_flag && !r8.degeneracy_flag && !u8.degeneracy_flag &&
                  t < 600.0;
  return {ok, fmt("mu(k=0)=%.1e, mu(0.5)=%.4f, mu_o(8)=%.4f, mu_u(8)=%.4f; per-state "
                  "k=0.5 [%.3f, %.3f], k=8 [%.3f, %.3f]; %.1f s (<600 s)",
                  mu0, mu05, mu8, mu8u, lo05, hi05, lo8, hi8, t)};
}

Outcome c11_invariants() {
  double worst_fid = 0.0;
  for (int n = 3; n <= 10; ++n) {
    for (int i = 0; i < 50; ++i) {
      const PureState s = haar_random_state(SpinQuantum(n - 1), 1100 + 100 * n + i);
      tracked_entropy(s, {});
      worst_fid = std::max(worst_fid, 1 - fidelity(s, state_from_zeros(s.quantum(), stellar_zeros(s))));
    }
  }
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  double worst_rot = 0.0;
  for (int n : {3, 6, 12, 25}) {
    for (int i = 0; i < 5; ++i) {
      const SpinQuantum q(n - 1);
      const PureState s = haar_random_state(q, 5000 + 10 * n + i);
      Eigen::Vector3d axis(g(rng), g(rng), g(rng));
      const CMatrix r = rotation_operator(q, axis.normalized(), 1.0 + std::abs(g(rng)));
      const double a = tracked_entropy(s, {});
      const double b = tracked_entropy(PureState(q, r * s.amplitudes()), {});
      worst_rot = std::max(worst_rot, std::abs(a - b));
    }
  }
  const double resid = identity_resolution_residual(QuadratureGrid(SpinQuantum(61), 256, 256));
  const bool lieb = g_lieb_margin >= -1e-8;
  return {worst_fid <= 1e-8 && worst_rot < 1e-8 && resid < 1e-8 && lieb,
          fmt("round-trip 1-F max %.1e (<=1e-8); rotation max %.1e (<1e-8); identity "
              "residual %.1e (<1e-8); lower bound margin min %.2e over %ld states",
              worst_fid, worst_rot, resid, g_lieb_margin, g_lieb_count)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  // The invariant suite runs last so its lower-bound check covers every sampled state.
  const Criterion criteria[] = {
      {"jz-eigenstate-table", c1_jz_table},
      {"coherent-entropy", c2_coherent},
      {"maximally-mixed-entropy", c3_mixed},
      {"random-state-mean", c4_random_mean},
      {"n4-triangle-state", c5_triangle},
      {"spin1-basis-minimum", c6_spin1_minimum},
      {"two-zero-entropy-identity", c7_two_zero},
      {"unperturbed-baseline-n62", c8_unperturbed},
      {"phase-space-shannon-identity", c9_phase_space_identity},
      {"chaos-transition-n62", c10_chaos_transition},
      {"invariant-suites", c11_invariants},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2d %-30s %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", index, c.name,
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
