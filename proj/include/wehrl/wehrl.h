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
/*
 * C interface to the wehrl library.
 *
 * Objects are opaque handles created by wehrl_*_create-style functions and
 * released with the matching *_free. Every fallible call returns a
 * wehrl_status; on failure wehrl_last_error() describes the problem (the
 * message is per thread and valid until the next failing call on that
 * thread). Angles are radians. Basis index i corresponds to m = j - i.
 */
#ifndef WEHRL_WEHRL_H_
#define WEHRL_WEHRL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define WEHRL_API __declspec(dllexport)
#else
#  define WEHRL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wehrl_status {
  WEHRL_OK = 0,
  WEHRL_ERR_INVALID_ARGUMENT = 1,
  WEHRL_ERR_NUMERICAL = 2,
  WEHRL_ERR_NOT_CONVERGED = 3,
  WEHRL_ERR_UNDEFINED = 4,
  WEHRL_ERR_INTERNAL = 5
} wehrl_status;

typedef enum wehrl_model {
  WEHRL_MODEL_ORTHOGONAL = 0,
  WEHRL_MODEL_UNITARY = 1
} wehrl_model;

/* Members of the spin-1 basis returned by wehrl_state_chi. */
typedef enum wehrl_chi_member {
  WEHRL_CHI_FIXED = 0, /* |-1>   */
  WEHRL_CHI_MINUS = 1, /* |chi-> */
  WEHRL_CHI_PLUS = 2   /* |chi+> */
} wehrl_chi_member;

typedef struct wehrl_state_s wehrl_state;
typedef struct wehrl_floquet_s wehrl_floquet;
typedef struct wehrl_eigensystem_s wehrl_eigensystem;

/* Zero resolutions select max(64, 4N) per axis. */
typedef struct wehrl_grid_policy {
  int n_theta;
  int n_phi;
  double tol;
  int max_nodes;
  int adaptive;
} wehrl_grid_policy;

typedef struct wehrl_entropy_result {
  double entropy;
  double est_error;
  int n_theta_used;
  int n_phi_used;
} wehrl_entropy_result;

typedef struct wehrl_mean_report {
  double mean_entropy;
  double baseline_jz;
  double baseline_random;
  double mu;      /* valid only when mu_defined != 0 */
  int mu_defined;
  int degenerate;
  double max_est_error;
} wehrl_mean_report;

typedef struct wehrl_sweep_record {
  double k;
  double k_prime;
  double mean_wehrl;
  double mu;
  int mu_defined;
  int degenerate;
  double max_est_error;
  int status;       /* wehrl_status of this row */
  char error[256];  /* empty on success */
} wehrl_sweep_record;

WEHRL_API const char* wehrl_version(void);
WEHRL_API const char* wehrl_last_error(void);

WEHRL_API void wehrl_grid_policy_default(wehrl_grid_policy* policy);

/* ---- pure states ---- */
WEHRL_API wehrl_status wehrl_state_coherent(int two_j, double theta, double phi,
                                            wehrl_state** out);
WEHRL_API wehrl_status wehrl_state_jz(int two_j, int two_m, wehrl_state** out);
/* Normalizes the given amplitudes; im may be NULL. */
WEHRL_API wehrl_status wehrl_state_from_amplitudes(int two_j, const double* re,
                                                   const double* im,
                                                   wehrl_state** out);
WEHRL_API wehrl_status wehrl_state_haar(int two_j, uint64_t seed,
                                        wehrl_state** out);
WEHRL_API wehrl_status wehrl_state_chi(double chi, wehrl_chi_member member,
                                       wehrl_state** out);
WEHRL_API wehrl_status wehrl_state_from_zeros(int two_j, size_t count,
                                              const double* theta,
                                              const double* phi,
                                              const int* multiplicity,
                                              wehrl_state** out);
WEHRL_API void wehrl_state_free(wehrl_state* state);

WEHRL_API int wehrl_state_dim(const wehrl_state* state);
WEHRL_API wehrl_status wehrl_state_amplitudes(const wehrl_state* state,
                                              double* re, double* im);
WEHRL_API wehrl_status wehrl_state_husimi(const wehrl_state* state,
                                          double theta, double phi,
                                          double* out);
/* policy may be NULL for the default. On WEHRL_ERR_NOT_CONVERGED the result
 * holds the best estimate. */
WEHRL_API wehrl_status wehrl_state_entropy(const wehrl_state* state,
                                           const wehrl_grid_policy* policy,
                                           wehrl_entropy_result* out);
/* Writes up to `capacity` zeros; *count receives the number of distinct
 * zeros (call with capacity 0 to query). cluster_tol <= 0 selects 1e-7. */
WEHRL_API wehrl_status wehrl_state_zeros(const wehrl_state* state,
                                         double cluster_tol, size_t capacity,
                                         double* theta, double* phi,
                                         int* multiplicity, size_t* count);
WEHRL_API wehrl_status wehrl_state_fidelity(const wehrl_state* a,
                                            const wehrl_state* b, double* out);

/* ---- density matrices (row-major N x N, im may be NULL) ---- */
WEHRL_API wehrl_status wehrl_density_husimi(int two_j, const double* re,
                                            const double* im, double theta,
                                            double phi, double* out);
WEHRL_API wehrl_status wehrl_density_entropy(int two_j, const double* re,
                                             const double* im,
                                             const wehrl_grid_policy* policy,
                                             wehrl_entropy_result* out);

/* ---- quadrature ---- */
WEHRL_API wehrl_status wehrl_grid_total_weight(int two_j, int n_theta,
                                               int n_phi, double* out);
/* max |sum_nodes w |alpha><alpha| - I| */
WEHRL_API wehrl_status wehrl_grid_identity_residual(int two_j, int n_theta,
                                                    int n_phi, double* out);

/* ---- closed forms ---- */
WEHRL_API wehrl_status wehrl_jz_closed(int two_j, int two_m, double* out);
WEHRL_API wehrl_status wehrl_mean_s_jz(int two_j, double* out);
WEHRL_API wehrl_status wehrl_random_mean_entropy(long n, double* out);
WEHRL_API wehrl_status wehrl_mu(double mean_entropy, int two_j, double* out);
WEHRL_API double wehrl_lee_two_zero(double omega);
WEHRL_API double wehrl_scutaru_two_zero(double omega);

/* ---- spin-1 basis family ---- */
WEHRL_API wehrl_status wehrl_chi_zero_cosines(double chi, double* cos_minus,
                                              double* cos_plus);
WEHRL_API wehrl_status wehrl_mean_entropy_chi(double chi, double* out);
WEHRL_API wehrl_status wehrl_minimize_chi(double tolerance, double* chi_star,
                                          double* s_star);

/* ---- Floquet operators ---- */
WEHRL_API wehrl_status wehrl_floquet_orthogonal(int two_j, double p, double k,
                                                wehrl_floquet** out);
WEHRL_API wehrl_status wehrl_floquet_unitary(int two_j, double p, double k,
                                             double k_prime,
                                             wehrl_floquet** out);
WEHRL_API wehrl_status wehrl_floquet_haar(int two_j, uint64_t seed,
                                          wehrl_floquet** out);
WEHRL_API void wehrl_floquet_free(wehrl_floquet* f);
WEHRL_API int wehrl_floquet_dim(const wehrl_floquet* f);
/* Row-major N x N. */
WEHRL_API wehrl_status wehrl_floquet_matrix(const wehrl_floquet* f, double* re,
                                            double* im);

/* cluster_tol < 0 selects 1e-8. */
WEHRL_API wehrl_status wehrl_eigensystem_create(const wehrl_floquet* f,
                                                double cluster_tol,
                                                wehrl_eigensystem** out);
WEHRL_API void wehrl_eigensystem_free(wehrl_eigensystem* es);
WEHRL_API int wehrl_eigensystem_dim(const wehrl_eigensystem* es);
WEHRL_API int wehrl_eigensystem_degenerate(const wehrl_eigensystem* es);
WEHRL_API double wehrl_eigensystem_max_residual(const wehrl_eigensystem* es);
/* N ascending eigenphases in [0, 2 pi). */
WEHRL_API wehrl_status wehrl_eigensystem_phases(const wehrl_eigensystem* es,
                                                double* out);
/* Eigenvector `index` (ascending-phase order) as a new state handle. */
WEHRL_API wehrl_status wehrl_eigensystem_state(const wehrl_eigensystem* es,
                                               size_t index,
                                               wehrl_state** out);

/* per_state may be NULL, otherwise it receives N entropies. */
WEHRL_API wehrl_status wehrl_mean_wehrl(const wehrl_eigensystem* es,
                                        const wehrl_grid_policy* policy,
                                        double* per_state,
                                        wehrl_mean_report* out);
/* (1/N) sum_nodes w S_s(alpha) on a fixed n_theta x n_phi grid. */
WEHRL_API wehrl_status wehrl_shannon_average(const wehrl_eigensystem* es,
                                             int n_theta, int n_phi,
                                             double* out);

/* Evaluates a k-prime rule expression (see wehrl_sweep) at k. */
WEHRL_API wehrl_status wehrl_k_prime_eval(const char* rule, double k,
                                          double* out);

/* One record per k. k_prime_rule is an expression in k such as "k/2" (NULL
 * selects "k/2"); it is ignored for the orthogonal model. Row failures are
 * reported in the record and do not fail the call. */
WEHRL_API wehrl_status wehrl_sweep(int two_j, double p, const double* k_values,
                                   size_t count, const char* k_prime_rule,
                                   wehrl_model model,
                                   const wehrl_grid_policy* policy,
                                   wehrl_sweep_record* out);

#ifdef __cplusplus
}
#endif

#endif /* WEHRL_WEHRL_H_ */
