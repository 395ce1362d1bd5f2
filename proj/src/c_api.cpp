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
#include "wehrl/wehrl.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "wehrl/chaos.hpp"
#include "wehrl/entropy.hpp"
#include "wehrl/error.hpp"
#include "wehrl/floquet.hpp"
#include "wehrl/minima.hpp"
#include "wehrl/quadrature.hpp"
#include "wehrl/spin.hpp"
#include "wehrl/stellar.hpp"

struct wehrl_state_s {
  wehrl::PureState state;
};

struct wehrl_floquet_s {
  wehrl::FloquetOperator op;
};

struct wehrl_eigensystem_s {
  wehrl::EigenSystem es;
};

namespace {

thread_local std::string g_last_error;

wehrl_status fail(wehrl_status code, const char* what) {
  g_last_error = what;
  return code;
}

wehrl_status to_status(wehrl::ErrorCode code) {
  switch (code) {
    case wehrl::ErrorCode::kInvalidArgument:
      return WEHRL_ERR_INVALID_ARGUMENT;
    case wehrl::ErrorCode::kNumerical:
      return WEHRL_ERR_NUMERICAL;
    case wehrl::ErrorCode::kNotConverged:
      return WEHRL_ERR_NOT_CONVERGED;
    case wehrl::ErrorCode::kUndefined:
      return WEHRL_ERR_UNDEFINED;
  }
  return WEHRL_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
wehrl_status guarded(F&& body) {
  try {
    body();
    return WEHRL_OK;
  } catch (const wehrl::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(WEHRL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WEHRL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WEHRL_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) {
    throw wehrl::InvalidArgument(std::string(name) + " must not be NULL");
  }
}

wehrl::GridPolicy to_policy(const wehrl_grid_policy* p) {
  wehrl::GridPolicy policy;
  if (p == nullptr) return policy;
  policy.n_theta = p->n_theta;
  policy.n_phi = p->n_phi;
  policy.tol = p->tol;
  policy.max_nodes = p->max_nodes;
  policy.adaptive = p->adaptive != 0;
  return policy;
}

void fill(const wehrl::WehrlResult& r, wehrl_entropy_result* out) {
  out->entropy = r.entropy;
  out->est_error = r.est_error;
  out->n_theta_used = r.n_theta_used;
  out->n_phi_used = r.n_phi_used;
}

wehrl::CMatrix read_matrix(int n, const double* re, const double* im) {
  require(re, "re");
  wehrl::CMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const std::size_t i = static_cast<std::size_t>(r) * n + c;
      m(r, c) = wehrl::Complex(re[i], im != nullptr ? im[i] : 0.0);
    }
  }
  return m;
}

template <class State>
wehrl_status entropy_into(const State& state, const wehrl_grid_policy* policy,
                          wehrl_entropy_result* out) {
  try {
    fill(wehrl::wehrl_entropy(state, to_policy(policy)), out);
    return WEHRL_OK;
  } catch (const wehrl::ConvergenceError& e) {
    out->entropy = e.best_estimate();
    out->est_error = e.est_error();
    out->n_theta_used = out->n_phi_used = 0;
    return fail(WEHRL_ERR_NOT_CONVERGED, e.what());
  }
}

wehrl_state* wrap(wehrl::PureState s) { return new wehrl_state{std::move(s)}; }

}  // namespace

extern "C" {

const char* wehrl_version(void) { return "0.1.0"; }

const char* wehrl_last_error(void) { return g_last_error.c_str(); }

void wehrl_grid_policy_default(wehrl_grid_policy* policy) {
  if (policy == nullptr) return;
  const wehrl::GridPolicy d;
  *policy = {d.n_theta, d.n_phi, d.tol, d.max_nodes, d.adaptive ? 1 : 0};
}

wehrl_status wehrl_state_coherent(int two_j, double theta, double phi,
                                  wehrl_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(wehrl::coherent_state(wehrl::SpinQuantum(two_j),
                                      wehrl::SphericalPoint::make(theta, phi)));
  });
}

wehrl_status wehrl_state_jz(int two_j, int two_m, wehrl_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(wehrl::PureState::jz_eigenstate(wehrl::SpinQuantum(two_j), two_m));
  });
}

wehrl_status wehrl_state_from_amplitudes(int two_j, const double* re,
                                         const double* im, wehrl_state** out) {
  return guarded([&] {
    require(out, "out");
    require(re, "re");
    const wehrl::SpinQuantum q(two_j);
    wehrl::CVector v(q.dim());
    for (int i = 0; i < q.dim(); ++i) {
      v(i) = wehrl::Complex(re[i], im != nullptr ? im[i] : 0.0);
    }
    *out = wrap(wehrl::PureState(q, std::move(v)));
  });
}

wehrl_status wehrl_state_haar(int two_j, uint64_t seed, wehrl_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(wehrl::haar_random_state(wehrl::SpinQuantum(two_j), seed));
  });
}

wehrl_status wehrl_state_chi(double chi, wehrl_chi_member member,
                             wehrl_state** out) {
  return guarded([&] {
    require(out, "out");
    const int idx = static_cast<int>(member);
    if (idx < 0 || idx > 2) throw wehrl::InvalidArgument("bad chi basis member");
    *out = wrap(wehrl::chi_basis(chi).states[idx]);
  });
}

wehrl_status wehrl_state_from_zeros(int two_j, size_t count, const double* theta,
                                    const double* phi, const int* multiplicity,
                                    wehrl_state** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) {
      require(theta, "theta");
      require(phi, "phi");
    }
    wehrl::StellarZeros zeros;
    for (std::size_t i = 0; i < count; ++i) {
      zeros.zeros.push_back({wehrl::SphericalPoint::make(theta[i], phi[i]),
                             multiplicity != nullptr ? multiplicity[i] : 1});
    }
    *out = wrap(wehrl::state_from_zeros(wehrl::SpinQuantum(two_j), zeros));
  });
}

void wehrl_state_free(wehrl_state* state) { delete state; }

int wehrl_state_dim(const wehrl_state* state) {
  return state != nullptr ? state->state.dim() : 0;
}

wehrl_status wehrl_state_amplitudes(const wehrl_state* state, double* re,
                                    double* im) {
  return guarded([&] {
    require(state, "state");
    const wehrl::CVector& a = state->state.amplitudes();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (re != nullptr) re[i] = a(i).real();
      if (im != nullptr) im[i] = a(i).imag();
    }
  });
}

wehrl_status wehrl_state_husimi(const wehrl_state* state, double theta,
                                double phi, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = wehrl::husimi_value(state->state, wehrl::SphericalPoint::make(theta, phi));
  });
}

wehrl_status wehrl_state_entropy(const wehrl_state* state,
                                 const wehrl_grid_policy* policy,
                                 wehrl_entropy_result* out) {
  wehrl_status status = WEHRL_OK;
  const wehrl_status guard = guarded([&] {
    require(state, "state");
    require(out, "out");
    status = entropy_into(state->state, policy, out);
  });
  return guard != WEHRL_OK ? guard : status;
}

wehrl_status wehrl_state_zeros(const wehrl_state* state, double cluster_tol,
                               size_t capacity, double* theta, double* phi,
                               int* multiplicity, size_t* count) {
  return guarded([&] {
    require(state, "state");
    require(count, "count");
    wehrl::StellarOptions options;
    if (cluster_tol > 0.0) options.cluster_tol = cluster_tol;
    const wehrl::StellarZeros z = wehrl::stellar_zeros(state->state, options);
    *count = z.zeros.size();
    const std::size_t n = std::min(capacity, z.zeros.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (theta != nullptr) theta[i] = z.zeros[i].point.theta;
      if (phi != nullptr) phi[i] = z.zeros[i].point.phi;
      if (multiplicity != nullptr) multiplicity[i] = z.zeros[i].multiplicity;
    }
  });
}

wehrl_status wehrl_state_fidelity(const wehrl_state* a, const wehrl_state* b,
                                  double* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = wehrl::fidelity(a->state, b->state);
  });
}

wehrl_status wehrl_density_husimi(int two_j, const double* re, const double* im,
                                  double theta, double phi, double* out) {
  return guarded([&] {
    require(out, "out");
    const wehrl::SpinQuantum q(two_j);
    const wehrl::DensityMatrix rho(q, read_matrix(q.dim(), re, im));
    *out = wehrl::husimi_value(rho, wehrl::SphericalPoint::make(theta, phi));
  });
}

wehrl_status wehrl_density_entropy(int two_j, const double* re, const double* im,
                                   const wehrl_grid_policy* policy,
                                   wehrl_entropy_result* out) {
  wehrl_status status = WEHRL_OK;
  const wehrl_status guard = guarded([&] {
    require(out, "out");
    const wehrl::SpinQuantum q(two_j);
    const wehrl::DensityMatrix rho(q, read_matrix(q.dim(), re, im));
    status = entropy_into(rho, policy, out);
  });
  return guard != WEHRL_OK ? guard : status;
}

wehrl_status wehrl_grid_total_weight(int two_j, int n_theta, int n_phi,
                                     double* out) {
  return guarded([&] {
    require(out, "out");
    *out = wehrl::QuadratureGrid(wehrl::SpinQuantum(two_j), n_theta, n_phi)
               .total_weight();
  });
}

wehrl_status wehrl_grid_identity_residual(int two_j, int n_theta, int n_phi,
                                          double* out) {
  return guarded([&] {
    require(out, "out");
    *out = wehrl::identity_resolution_residual(
        wehrl::QuadratureGrid(wehrl::SpinQuantum(two_j), n_theta, n_phi));
  });
}

wehrl_status wehrl_jz_closed(int two_j, int two_m, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = wehrl::wehrl_jz_closed(wehrl::SpinQuantum(two_j), two_m);
  });
}

wehrl_status wehrl_mean_s_jz(int two_j, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = wehrl::mean_s_jz(wehrl::SpinQuantum(two_j));
  });
}

wehrl_status wehrl_random_mean_entropy(long n, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = wehrl::random_mean_entropy(n);
  });
}

wehrl_status wehrl_mu(double mean_entropy, int two_j, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = wehrl::mu_coefficient(mean_entropy, wehrl::SpinQuantum(two_j));
  });
}

double wehrl_lee_two_zero(double omega) { return wehrl::lee_entropy_two_zero(omega); }

double wehrl_scutaru_two_zero(double omega) {
  return wehrl::scutaru_entropy_two_zero(omega);
}

wehrl_status wehrl_chi_zero_cosines(double chi, double* cos_minus,
                                    double* cos_plus) {
  return guarded([&] {
    require(cos_minus, "cos_minus");
    require(cos_plus, "cos_plus");
    const wehrl::ZeroCosines z = wehrl::chi_zero_cosines(chi);
    *cos_minus = z.minus;
    *cos_plus = z.plus;
  });
}

wehrl_status wehrl_mean_entropy_chi(double chi, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = wehrl::mean_entropy_chi(chi);
  });
}

wehrl_status wehrl_minimize_chi(double tolerance, double* chi_star,
                                double* s_star) {
  return guarded([&] {
    require(chi_star, "chi_star");
    require(s_star, "s_star");
    const wehrl::ChiMinimum m = wehrl::minimize_chi(tolerance);
    *chi_star = m.chi;
    *s_star = m.entropy;
  });
}

wehrl_status wehrl_floquet_orthogonal(int two_j, double p, double k,
                                      wehrl_floquet** out) {
  return guarded([&] {
    require(out, "out");
    *out = new wehrl_floquet{
        wehrl::build_orthogonal_top(wehrl::SpinQuantum(two_j), p, k)};
  });
}

wehrl_status wehrl_floquet_unitary(int two_j, double p, double k,
                                   double k_prime, wehrl_floquet** out) {
  return guarded([&] {
    require(out, "out");
    *out = new wehrl_floquet{
        wehrl::build_unitary_top(wehrl::SpinQuantum(two_j), p, k, k_prime)};
  });
}

wehrl_status wehrl_floquet_haar(int two_j, uint64_t seed, wehrl_floquet** out) {
  return guarded([&] {
    require(out, "out");
    *out = new wehrl_floquet{
        wehrl::haar_random_unitary(wehrl::SpinQuantum(two_j), seed)};
  });
}

void wehrl_floquet_free(wehrl_floquet* f) { delete f; }

int wehrl_floquet_dim(const wehrl_floquet* f) {
  return f != nullptr ? f->op.quantum().dim() : 0;
}

wehrl_status wehrl_floquet_matrix(const wehrl_floquet* f, double* re, double* im) {
  return guarded([&] {
    require(f, "f");
    const wehrl::CMatrix& m = f->op.matrix();
    const Eigen::Index n = m.rows();
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) {
        const std::size_t i = static_cast<std::size_t>(r * n + c);
        if (re != nullptr) re[i] = m(r, c).real();
        if (im != nullptr) im[i] = m(r, c).imag();
      }
    }
  });
}

wehrl_status wehrl_eigensystem_create(const wehrl_floquet* f, double cluster_tol,
                                      wehrl_eigensystem** out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    const double tol = cluster_tol < 0.0 ? 1e-8 : cluster_tol;
    *out = new wehrl_eigensystem{wehrl::eigendecompose(f->op, tol)};
  });
}

void wehrl_eigensystem_free(wehrl_eigensystem* es) { delete es; }

int wehrl_eigensystem_dim(const wehrl_eigensystem* es) {
  return es != nullptr ? es->es.dim() : 0;
}

int wehrl_eigensystem_degenerate(const wehrl_eigensystem* es) {
  return es != nullptr && es->es.degenerate() ? 1 : 0;
}

double wehrl_eigensystem_max_residual(const wehrl_eigensystem* es) {
  return es != nullptr ? es->es.max_residual : 0.0;
}

wehrl_status wehrl_eigensystem_phases(const wehrl_eigensystem* es, double* out) {
  return guarded([&] {
    require(es, "es");
    require(out, "out");
    std::copy(es->es.eigenphases.begin(), es->es.eigenphases.end(), out);
  });
}

wehrl_status wehrl_eigensystem_state(const wehrl_eigensystem* es, size_t index,
                                     wehrl_state** out) {
  return guarded([&] {
    require(es, "es");
    require(out, "out");
    if (index >= es->es.eigenvectors.size()) {
      throw wehrl::InvalidArgument("eigenstate index " + std::to_string(index) +
                                   " out of range");
    }
    *out = wrap(es->es.eigenvectors[index]);
  });
}

wehrl_status wehrl_mean_wehrl(const wehrl_eigensystem* es,
                              const wehrl_grid_policy* policy, double* per_state,
                              wehrl_mean_report* out) {
  return guarded([&] {
    require(es, "es");
    require(out, "out");
    const wehrl::MeanEntropyReport r = wehrl::mean_wehrl(es->es, to_policy(policy));
    out->mean_entropy = r.mean_entropy;
    out->baseline_jz = r.baseline_jz;
    out->baseline_random = r.baseline_random;
    out->mu = r.mu.value_or(0.0);
    out->mu_defined = r.mu.has_value() ? 1 : 0;
    out->degenerate = r.degeneracy_flag ? 1 : 0;
    out->max_est_error = r.max_est_error;
    if (per_state != nullptr) {
      std::copy(r.per_state.begin(), r.per_state.end(), per_state);
    }
  });
}

wehrl_status wehrl_shannon_average(const wehrl_eigensystem* es, int n_theta,
                                   int n_phi, double* out) {
  return guarded([&] {
    require(es, "es");
    require(out, "out");
    const wehrl::QuadratureGrid grid(es->es.q, n_theta, n_phi);
    *out = wehrl::shannon_field(es->es, grid).phase_space_average();
  });
}

wehrl_status wehrl_k_prime_eval(const char* rule, double k, double* out) {
  return guarded([&] {
    require(rule, "rule");
    require(out, "out");
    *out = wehrl::KPrimeRule(rule)(k);
  });
}

wehrl_status wehrl_sweep(int two_j, double p, const double* k_values, size_t count,
                         const char* k_prime_rule, wehrl_model model,
                         const wehrl_grid_policy* policy, wehrl_sweep_record* out) {
  return guarded([&] {
    require(k_values, "k_values");
    require(out, "out");
    wehrl::SweepConfig config;
    config.q = wehrl::SpinQuantum(two_j);
    config.p = p;
    config.k_values.assign(k_values, k_values + count);
    if (k_prime_rule != nullptr) config.k_prime_rule = wehrl::KPrimeRule(k_prime_rule);
    if (model != WEHRL_MODEL_ORTHOGONAL && model != WEHRL_MODEL_UNITARY) {
      throw wehrl::InvalidArgument("unknown model");
    }
    config.model = model == WEHRL_MODEL_UNITARY ? wehrl::TopModel::kUnitary
                                                : wehrl::TopModel::kOrthogonal;
    if (policy != nullptr) config.policy = to_policy(policy);
    const std::vector<wehrl::SweepRecord> records = wehrl::sweep_kicked_top(config);
    for (std::size_t i = 0; i < records.size(); ++i) {
      const wehrl::SweepRecord& r = records[i];
      wehrl_sweep_record& o = out[i];
      o.k = r.k;
      o.k_prime = r.k_prime;
      o.mean_wehrl = r.mean_wehrl;
      o.mu = r.mu.value_or(0.0);
      o.mu_defined = r.mu.has_value() ? 1 : 0;
      o.degenerate = r.degenerate ? 1 : 0;
      o.max_est_error = r.max_est_error;
      o.status = r.error.empty() ? WEHRL_OK : WEHRL_ERR_NUMERICAL;
      std::memset(o.error, 0, sizeof(o.error));
      std::strncpy(o.error, r.error.c_str(), sizeof(o.error) - 1);
    }
  });
}

}  // extern "C"
