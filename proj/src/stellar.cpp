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
#include "wehrl/stellar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "wehrl/error.hpp"

namespace wehrl {
namespace {

// A root of p stored in the chart where it is bounded: u itself when
// |u| <= 1, otherwise v = 1/u. South-pole zeros are v = 0.
struct ChartRoot {
  bool inverted = false;
  Complex w;

  SphericalPoint point() const {
    // The azimuth is meaningless at the poles; report 0 there.
    if (w == Complex(0.0)) return {inverted ? kPi : 0.0, 0.0};
    if (!inverted) {
      return SphericalPoint::make(2.0 * std::atan(std::abs(w)), -std::arg(w));
    }
    return SphericalPoint::make(kPi - 2.0 * std::atan(std::abs(w)),
                                std::arg(w));
  }
};

ChartRoot to_chart(Complex u) {
  if (std::abs(u) <= 1.0) return {false, u};
  return {true, 1.0 / u};
}

// Parlett-Reinsch diagonal balancing with the |re| + |im| norm.
void balance(CMatrix& a) {
  constexpr double kRadix = 2.0;
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i).real()) + std::abs(a(j, i).imag());
        r += std::abs(a(i, j).real()) + std::abs(a(i, j).imag());
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      double g = r / kRadix;
      while (c < g) {
        f *= kRadix;
        c *= kRadix * kRadix;
      }
      g = r * kRadix;
      while (c > g) {
        f /= kRadix;
        c /= kRadix * kRadix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

// Horner for sum_i coeffs[i] x^i.
Complex horner(const std::vector<Complex>& coeffs, Complex x) {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// p^{(r)} / r! as a coefficient vector.
std::vector<Complex> scaled_derivative(const std::vector<Complex>& coeffs,
                                       int r) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (r > deg) return {Complex(0.0)};
  std::vector<Complex> out(deg - r + 1);
  for (int i = 0; i <= deg - r; ++i) {
    out[i] = std::exp(log_binomial(i + r, r)) * coeffs[i + r];
  }
  return out;
}

// Newton on p^{(m-1)}, which has the m-fold root of p as a simple root.
Complex polish_multiple(const std::vector<Complex>& coeffs, int m, Complex x) {
  const std::vector<Complex> g = scaled_derivative(coeffs, m - 1);
  if (g.size() < 2) return x;
  std::vector<Complex> dg(g.size() - 1);
  for (std::size_t i = 1; i < g.size(); ++i) dg[i - 1] = double(i) * g[i];
  Complex best = x;
  double best_res = std::abs(horner(g, x));
  for (int iter = 0; iter < 8 && best_res > 0.0; ++iter) {
    const Complex d = horner(dg, x);
    if (d == Complex(0.0)) break;
    x -= horner(g, x) / d;
    const double res = std::abs(horner(g, x));
    if (!std::isfinite(res)) break;
    if (res < best_res) {
      best_res = res;
      best = x;
    }
  }
  return best;
}

struct Unit {
  std::vector<int> members;  // indices into the raw root list
  SphericalPoint point;
};

class ZeroClusterer {
 public:
  ZeroClusterer(const PureState& psi, std::vector<Complex> coeffs,
                std::vector<ChartRoot> roots, const StellarOptions& options)
      : psi_(psi),
        u_coeffs_(std::move(coeffs)),
        roots_(std::move(roots)),
        options_(options) {
    v_coeffs_.assign(u_coeffs_.rbegin(), u_coeffs_.rend());
    for (const ChartRoot& r : roots_) points_.push_back(r.point());
  }

  std::vector<Unit> run() {
    const int count = static_cast<int>(roots_.size());
    std::vector<Unit> units;
    for (int i = 0; i < count; ++i) units.push_back({{i}, points_[i]});
    // Levels of single-linkage threshold from cluster_tol up to the sphere
    // diameter; each connected component is merged when it looks like one
    // multiple zero.
    for (double t = options_.cluster_tol; units.size() > 1; t *= 1.5) {
      units = merge_level(units, std::min(t, 2.0));
      if (t >= 2.0) break;
    }
    return units;
  }

 private:
  std::vector<Unit> merge_level(const std::vector<Unit>& units, double t) {
    const std::size_t n = units.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (find(a) == find(b)) continue;
        if (linked(units[a], units[b], t)) parent[find(a)] = find(b);
      }
    }
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t a = 0; a < n; ++a) groups[find(a)].push_back(a);

    std::vector<Unit> out;
    for (const auto& group : groups) {
      if (group.empty()) continue;
      if (group.size() == 1) {
        out.push_back(units[group[0]]);
        continue;
      }
      Unit merged;
      for (std::size_t a : group) {
        merged.members.insert(merged.members.end(), units[a].members.begin(),
                              units[a].members.end());
      }
      if (accept(merged, t)) {
        out.push_back(std::move(merged));
      } else {
        for (std::size_t a : group) out.push_back(units[a]);
      }
    }
    return out;
  }

  bool linked(const Unit& a, const Unit& b, double t) const {
    for (int i : a.members) {
      for (int j : b.members) {
        if (chord_distance(points_[i], points_[j]) <= t) return true;
      }
    }
    return false;
  }

  bool accept(Unit& unit, double t) {
    const int m = static_cast<int>(unit.members.size());
    // An m-fold zero scatters like eps^(1/m) under companion rounding.
    const double gate =
        std::max(options_.cluster_tol, 10.0 * std::pow(1e-14, 1.0 / m));
    if (t > gate) return false;
    const std::optional<SphericalPoint> centre = centroid(unit.members, m);
    if (!centre) return false;
    unit.point = *centre;
    if (t <= options_.cluster_tol) return true;
    return husimi_value(psi_, unit.point) < options_.merge_husimi_tol;
  }

  std::optional<SphericalPoint> centroid(const std::vector<int>& members,
                                         int m) const {
    bool use_v = false;
    for (int i : members) {
      if (roots_[i].inverted && std::abs(roots_[i].w) < 0.5) use_v = true;
    }
    Complex sum = 0.0;
    for (int i : members) {
      const ChartRoot& r = roots_[i];
      if (r.inverted == use_v) {
        sum += r.w;
      } else {
        if (r.w == Complex(0.0)) return std::nullopt;
        sum += 1.0 / r.w;
      }
    }
    Complex x = sum / double(m);
    x = polish_multiple(use_v ? v_coeffs_ : u_coeffs_, m, x);
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      return std::nullopt;
    }
    ChartRoot c{use_v, x};
    if (std::abs(x) > 1.0) c = {!use_v, 1.0 / x};
    return c.point();
  }

  const PureState& psi_;
  std::vector<Complex> u_coeffs_;
  std::vector<Complex> v_coeffs_;
  std::vector<ChartRoot> roots_;
  std::vector<SphericalPoint> points_;
  const StellarOptions& options_;
};

}  // namespace

int StellarZeros::total_multiplicity() const {
  int total = 0;
  for (const StellarZero& z : zeros) total += z.multiplicity;
  return total;
}

std::vector<SphericalPoint> StellarZeros::expanded() const {
  std::vector<SphericalPoint> out;
  for (const StellarZero& z : zeros) {
    out.insert(out.end(), static_cast<std::size_t>(z.multiplicity), z.point);
  }
  return out;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  if (coeffs.empty() || coeffs.back() == Complex(0.0)) {
    throw InvalidArgument("polynomial needs a nonzero leading coefficient");
  }
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg == 0) return {};
  CMatrix companion = CMatrix::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
  balance(companion);
  Eigen::ComplexEigenSolver<CMatrix> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("companion eigensolver failed");
  }
  const CVector& ev = solver.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

StellarZeros stellar_zeros(const PureState& psi, const StellarOptions& options) {
  const int n = psi.quantum().two_j();
  std::vector<Complex> c(n + 1);
  double cmax = 0.0;
  for (int k = 0; k <= n; ++k) {
    c[k] = psi.amplitudes()(k) * std::exp(0.5 * log_binomial(n, k));
    cmax = std::max(cmax, std::abs(c[k]));
  }
  const double cutoff = options.deficiency_tol * cmax;
  // Missing top degree: zeros at u = infinity (south pole). Missing low
  // orders: zeros at u = 0 (north pole).
  int top = n;
  while (top > 0 && std::abs(c[top]) < cutoff) --top;
  int low = 0;
  while (low < top && std::abs(c[low]) < cutoff) ++low;

  std::vector<ChartRoot> roots;
  for (int i = 0; i < n - top; ++i) roots.push_back({true, Complex(0.0)});
  for (int i = 0; i < low; ++i) roots.push_back({false, Complex(0.0)});
  const std::vector<Complex> reduced(c.begin() + low, c.begin() + top + 1);
  for (Complex u : polynomial_roots(reduced)) roots.push_back(to_chart(u));

  // Exact pole zeros already share a point; the clusterer merges them at the
  // first level together with any numerically scattered multiple roots.
  ZeroClusterer clusterer(psi, c, roots, options);
  StellarZeros result;
  for (const Unit& unit : clusterer.run()) {
    result.zeros.push_back(
        {unit.point, static_cast<int>(unit.members.size())});
  }
  std::sort(result.zeros.begin(), result.zeros.end(),
            [](const StellarZero& a, const StellarZero& b) {
              if (a.point.theta != b.point.theta) return a.point.theta < b.point.theta;
              return a.point.phi < b.point.phi;
            });
  return result;
}

PureState state_from_zeros(SpinQuantum q, const StellarZeros& zeros) {
  const int n = q.two_j();
  for (const StellarZero& z : zeros.zeros) {
    if (z.multiplicity < 1) throw InvalidArgument("zero multiplicity must be >= 1");
  }
  if (zeros.total_multiplicity() != n) {
    throw InvalidArgument("total zero multiplicity " +
                          std::to_string(zeros.total_multiplicity()) +
                          " differs from N-1 = " + std::to_string(n));
  }
  // Northern zeros contribute (u - u_k), southern ones (1 - v_k u) with
  // v_k = 1/u_k; the dropped constants only change the global factor.
  std::vector<Complex> poly{Complex(1.0)};
  auto multiply = [&](Complex c0, Complex c1) {
    std::vector<Complex> next(poly.size() + 1, Complex(0.0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += c0 * poly[i];
      next[i + 1] += c1 * poly[i];
    }
    poly = std::move(next);
  };
  for (const StellarZero& z : zeros.zeros) {
    const SphericalPoint p = SphericalPoint::make(z.point.theta, z.point.phi);
    for (int r = 0; r < z.multiplicity; ++r) {
      if (p.theta <= 0.5 * kPi) {
        const Complex u = std::polar(std::tan(0.5 * p.theta), -p.phi);
        multiply(-u, 1.0);
      } else {
        const double cot = std::tan(0.5 * (kPi - p.theta));
        const Complex v = std::polar(cot, p.phi);
        multiply(1.0, -v);
      }
    }
  }
  CVector amps = CVector::Zero(q.dim());
  for (int k = 0; k <= n && k < static_cast<int>(poly.size()); ++k) {
    amps(k) = poly[k] * std::exp(-0.5 * log_binomial(n, k));
  }
  return PureState(q, std::move(amps));
}

double fidelity(const PureState& a, const PureState& b) {
  if (!(a.quantum() == b.quantum())) {
    throw InvalidArgument("fidelity of states with different dimensions");
  }
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

double zero_set_distance(const StellarZeros& a, const StellarZeros& b) {
  const std::vector<SphericalPoint> pa = a.expanded();
  std::vector<SphericalPoint> pb = b.expanded();
  if (pa.size() != pb.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  std::vector<bool> used(pb.size(), false);
  for (const SphericalPoint& p : pa) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < pb.size(); ++j) {
      if (used[j]) continue;
      const double d = chord_distance(p, pb[j]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    used[best_j] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace wehrl
