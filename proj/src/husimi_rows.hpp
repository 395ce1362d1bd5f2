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

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

#include <fftw3.h>

#include "wehrl/quadrature.hpp"
#include "wehrl/spin.hpp"

namespace wehrl {

// Fills one grid row with Husimi values. On a fixed row the overlap
// <psi|theta,phi> is a polynomial of degree 2j in e^{i phi} and the mixed-state
// Husimi function is a trigonometric polynomial of the same degree, so every
// row is one length-n_phi inverse DFT of the folded coefficients.
class RowEvaluator {
 public:
  explicit RowEvaluator(const QuadratureGrid& grid)
      : grid_(grid), n_(grid.quantum().two_j()), n_phi_(grid.n_phi()) {
    log_binom_half_.resize(n_ + 1);
    for (int k = 0; k <= n_; ++k) log_binom_half_[k] = 0.5 * log_binomial(n_, k);
    in_ = fftw_alloc_complex(n_phi_);
    out_ = fftw_alloc_complex(n_phi_);
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(n_phi_, in_, out_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  RowEvaluator(const RowEvaluator&) = delete;
  RowEvaluator& operator=(const RowEvaluator&) = delete;

  ~RowEvaluator() {
    {
      std::lock_guard<std::mutex> lock(planner_mutex());
      fftw_destroy_plan(plan_);
    }
    fftw_free(in_);
    fftw_free(out_);
  }

  // sqrt(C(n,k)) sin^k(theta/2) cos^(n-k)(theta/2) for row `row`.
  void coherent_magnitudes(int row, std::vector<double>& out) const {
    const double t = grid_.t(row);
    const double log_s = 0.5 * std::log(0.5 * (1.0 - t));
    const double log_c = 0.5 * std::log(0.5 * (1.0 + t));
    out.resize(n_ + 1);
    for (int k = 0; k <= n_; ++k) {
      out[k] = std::exp(log_binom_half_[k] + k * log_s + (n_ - k) * log_c);
    }
  }

  void pure_row(const CVector& psi, int row, std::vector<double>& h) {
    coherent_magnitudes(row, mag_);
    clear_input();
    for (int k = 0; k <= n_; ++k) accumulate(k, std::conj(psi(k)) * mag_[k]);
    fftw_execute(plan_);
    h.resize(n_phi_);
    for (int l = 0; l < n_phi_; ++l) {
      h[l] = out_[l][0] * out_[l][0] + out_[l][1] * out_[l][1];
    }
  }

  void mixed_row(const CMatrix& rho, int row, std::vector<double>& h) {
    coherent_magnitudes(row, mag_);
    // H(phi) = sum_{k,k'} mag_k mag_k' rho_kk' e^{i (k'-k) phi}
    clear_input();
    for (int k = 0; k <= n_; ++k) {
      for (int kp = 0; kp <= n_; ++kp) {
        accumulate(kp - k, mag_[k] * mag_[kp] * rho(k, kp));
      }
    }
    fftw_execute(plan_);
    h.resize(n_phi_);
    for (int l = 0; l < n_phi_; ++l) h[l] = std::max(0.0, out_[l][0]);
  }

 private:
  static std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
  }

  void clear_input() {
    for (int l = 0; l < n_phi_; ++l) in_[l][0] = in_[l][1] = 0.0;
  }

  // Adds c to the coefficient of e^{i d phi}, folded modulo n_phi.
  void accumulate(int d, Complex c) {
    int idx = d % n_phi_;
    if (idx < 0) idx += n_phi_;
    in_[idx][0] += c.real();
    in_[idx][1] += c.imag();
  }

  const QuadratureGrid& grid_;
  int n_;
  int n_phi_;
  std::vector<double> log_binom_half_;
  std::vector<double> mag_;
  fftw_complex* in_ = nullptr;
  fftw_complex* out_ = nullptr;
  fftw_plan plan_ = nullptr;
};

}  // namespace wehrl
