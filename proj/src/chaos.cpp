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
#include "wehrl/chaos.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

#include "wehrl/error.hpp"
#include "husimi_rows.hpp"
#include "summation.hpp"

namespace wehrl {
namespace {

// Recursive-descent evaluator for the k-prime expression grammar:
//   expr := term (('+'|'-') term)*
//   term := factor (('*'|'/') factor)*
//   factor := ('-'|'+') factor | number | 'k' | '(' expr ')'
class ExpressionParser {
 public:
  ExpressionParser(const std::string& text, double k) : text_(text), k_(k) {}

  double parse() {
    const double v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw InvalidArgument("bad k-prime rule '" + text_ + "': " + what +
                          " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool take(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    while (true) {
      if (take('+')) {
        v += term();
      } else if (take('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = factor();
    while (true) {
      if (take('*')) {
        v *= factor();
      } else if (take('/')) {
        v /= factor();
      } else {
        return v;
      }
    }
  }

  double factor() {
    if (take('-')) return -factor();
    if (take('+')) return factor();
    if (take('(')) {
      const double v = expr();
      if (!take(')')) fail("missing ')'");
      return v;
    }
    if (take('k')) return k_;
    skip_space();
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number, 'k' or '('");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  const std::string& text_;
  double k_;
  std::size_t pos_ = 0;
};

}  // namespace

double mean_s_jz(SpinQuantum q) {
  NeumaierSum sum;
  for (int two_m = -q.two_j(); two_m <= q.two_j(); two_m += 2) {
    sum.add(wehrl_jz_closed(q, two_m));
  }
  return sum.value() / q.dim();
}

double random_mean_entropy(long n) {
  if (n < 2) throw InvalidArgument("random_mean_entropy needs N >= 2");
  if (n <= 1000000) {
    NeumaierSum sum;
    for (long i = n; i >= 2; --i) sum.add(1.0 / static_cast<double>(i));
    return sum.value();
  }
  // H_N - 1 from the asymptotic series of the harmonic numbers.
  const double x = static_cast<double>(n);
  const double x2 = x * x;
  return std::log(x) + kEulerGamma - 1.0 + 1.0 / (2.0 * x) - 1.0 / (12.0 * x2) +
         1.0 / (120.0 * x2 * x2);
}

double mu_coefficient(double s_f, SpinQuantum q) {
  const double s_jz = mean_s_jz(q);
  const double denom = random_mean_entropy(q.dim()) - s_jz;
  if (!(denom > 1e-12)) {
    throw Error(ErrorCode::kUndefined,
                "mu undefined at N=" + std::to_string(q.dim()) +
                    ": random-state mean equals the J_z mean");
  }
  return (s_f - s_jz) / denom;
}

MeanEntropyReport mean_wehrl(const EigenSystem& es, const GridPolicy& policy) {
  MeanEntropyReport report;
  const SpinQuantum q = es.q;
  NeumaierSum sum;
  for (std::size_t i = 0; i < es.eigenvectors.size(); ++i) {
    WehrlResult r;
    try {
      r = wehrl_entropy(es.eigenvectors[i], policy);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("eigenstate " + std::to_string(i) + ": " + e.what(),
                             e.best_estimate(), e.est_error());
    }
    report.per_state.push_back(r.entropy);
    report.max_est_error = std::max(report.max_est_error, r.est_error);
    sum.add(r.entropy);
  }
  report.mean_entropy = sum.value() / static_cast<double>(report.per_state.size());
  report.baseline_jz = mean_s_jz(q);
  report.baseline_random = random_mean_entropy(q.dim());
  if (q.dim() > 2) report.mu = mu_coefficient(report.mean_entropy, q);
  report.degeneracy_flag = es.degenerate();
  return report;
}

double ShannonField::phase_space_average() const {
  NeumaierSum total;
  const int np = grid.n_phi();
  for (int i = 0; i < grid.n_theta(); ++i) {
    NeumaierSum row;
    for (int l = 0; l < np; ++l) row.add(values[static_cast<std::size_t>(i) * np + l]);
    total.add(grid.row_weight(i) * row.value());
  }
  return total.value() / grid.quantum().dim();
}

ShannonField shannon_field(const EigenSystem& es, const QuadratureGrid& grid) {
  if (!(es.q == grid.quantum())) {
    throw InvalidArgument("grid and eigensystem dimensions differ");
  }
  const int np = grid.n_phi();
  std::vector<double> values(grid.size(), 0.0);
  RowEvaluator eval(grid);
  std::vector<double> h;
  for (int i = 0; i < grid.n_theta(); ++i) {
    double* row = values.data() + static_cast<std::size_t>(i) * np;
    // |c_i(alpha)|^2 = |<psi_i|alpha>|^2 is the Husimi value of psi_i.
    for (const PureState& psi : es.eigenvectors) {
      eval.pure_row(psi.amplitudes(), i, h);
      for (int l = 0; l < np; ++l) row[l] -= xlogx(h[l]);
    }
  }
  return ShannonField{std::move(values), grid};
}

KPrimeRule::KPrimeRule(std::string expression)
    : expression_(std::move(expression)) {
  (void)(*this)(1.0);
}

double KPrimeRule::operator()(double k) const {
  return ExpressionParser(expression_, k).parse();
}

std::vector<SweepRecord> sweep_kicked_top(const SweepConfig& config) {
  if (config.k_values.empty()) throw InvalidArgument("sweep needs at least one k");
  std::vector<SweepRecord> records;
  records.reserve(config.k_values.size());
  for (double k : config.k_values) {
    SweepRecord rec;
    rec.k = k;
    try {
      rec.k_prime = config.model == TopModel::kUnitary ? config.k_prime_rule(k) : 0.0;
      const FloquetOperator f =
          build_kicked_top(config.q, config.model, {config.p, k, rec.k_prime});
      const EigenSystem es = eigendecompose(f, config.cluster_tol);
      const MeanEntropyReport report = mean_wehrl(es, config.policy);
      rec.mean_wehrl = report.mean_entropy;
      rec.mu = report.mu;
      rec.degenerate = report.degeneracy_flag;
      rec.max_est_error = report.max_est_error;
    } catch (const Error& e) {
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace wehrl
