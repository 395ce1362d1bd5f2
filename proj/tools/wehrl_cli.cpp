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
// Command-line front end. Talks to the library exclusively through the C API.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wehrl/wehrl.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitCheckFailed = 3;
constexpr double kPi = std::numbers::pi;

// Failure carrying the process exit code.
struct CliFailure {
  int exit_code;
  std::string message;
};

void check(wehrl_status s, const std::string& context) {
  if (s == WEHRL_OK) return;
  const int code = s == WEHRL_ERR_INVALID_ARGUMENT ? kExitUsage : kExitNumerical;
  throw CliFailure{code, context + ": " + wehrl_last_error()};
}

struct StateDeleter {
  void operator()(wehrl_state* s) const { wehrl_state_free(s); }
};
struct FloquetDeleter {
  void operator()(wehrl_floquet* f) const { wehrl_floquet_free(f); }
};
struct EigenDeleter {
  void operator()(wehrl_eigensystem* e) const { wehrl_eigensystem_free(e); }
};
using StatePtr = std::unique_ptr<wehrl_state, StateDeleter>;
using FloquetPtr = std::unique_ptr<wehrl_floquet, FloquetDeleter>;
using EigenPtr = std::unique_ptr<wehrl_eigensystem, EigenDeleter>;

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// "3/2", "-1/2", "1"
std::string half_integer(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

json policy_json(const wehrl_grid_policy& p) {
  return {{"n_theta", p.n_theta}, {"n_phi", p.n_phi}, {"tol", p.tol},
          {"max_nodes", p.max_nodes}, {"adaptive", p.adaptive != 0}};
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

struct Common {
  int two_j = 61;
  double p = 1.7;
  double k = 8.0;
  std::string k_prime_rule = "k/2";
  std::string model = "orthogonal";
  int n_theta = 0;
  int n_phi = 0;
  double tol = 1e-9;
  bool tol_set = false;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";

  wehrl_grid_policy policy(double default_tol) const {
    wehrl_grid_policy gp;
    wehrl_grid_policy_default(&gp);
    gp.n_theta = n_theta;
    gp.n_phi = n_phi;
    gp.tol = tol_set ? tol : default_tol;
    return gp;
  }

  json to_json() const {
    return {{"two_j", two_j}, {"p", p}, {"k", k}, {"k_prime_rule", k_prime_rule},
            {"model", model}, {"n_theta", n_theta}, {"n_phi", n_phi},
            {"tol", tol_set ? json(tol) : json(nullptr)}, {"seed", seed},
            {"format", format}};
  }
};

// Writes `body` (and an optional sidecar) to --out, or to stdout.
void emit(const Common& c, const std::string& body, const json* sidecar) {
  if (c.out.empty()) {
    std::cout << body;
    if (sidecar != nullptr) std::cerr << sidecar->dump(2) << "\n";
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw CliFailure{kExitUsage, "cannot open " + c.out};
  f << body;
  if (sidecar != nullptr) {
    std::ofstream meta(c.out + ".json");
    meta << sidecar->dump(2) << "\n";
  }
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw CliFailure{kExitUsage, "bad number '" + s + "' in " + what};
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// State selectors:
//   jz:<two_m>  coherent:<theta>,<phi>  eigen:<index>  haar
//   chi:<chi>:<fixed|minus|plus>  amps:<re>:<im>,<re>:<im>,...
StatePtr select_state(const Common& c, const std::string& selector, json& info) {
  const auto colon = selector.find(':');
  const std::string kind = selector.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : selector.substr(colon + 1);
  wehrl_state* raw = nullptr;
  info["selector"] = selector;
  if (kind == "jz") {
    check(wehrl_state_jz(c.two_j, static_cast<int>(parse_double(arg, "jz selector")), &raw),
          "jz state");
  } else if (kind == "coherent") {
    const auto parts = split(arg, ',');
    if (parts.size() != 2) throw CliFailure{kExitUsage, "coherent selector needs theta,phi"};
    check(wehrl_state_coherent(c.two_j, parse_double(parts[0], "theta"),
                               parse_double(parts[1], "phi"), &raw),
          "coherent state");
  } else if (kind == "haar") {
    check(wehrl_state_haar(c.two_j, c.seed, &raw), "random state");
  } else if (kind == "chi") {
    const auto parts = split(arg, ':');
    if (parts.size() != 2) throw CliFailure{kExitUsage, "chi selector needs chi:member"};
    wehrl_chi_member member;
    if (parts[1] == "fixed") {
      member = WEHRL_CHI_FIXED;
    } else if (parts[1] == "minus") {
      member = WEHRL_CHI_MINUS;
    } else if (parts[1] == "plus") {
      member = WEHRL_CHI_PLUS;
    } else {
      throw CliFailure{kExitUsage, "chi member must be fixed, minus or plus"};
    }
    check(wehrl_state_chi(parse_double(parts[0], "chi"), member, &raw), "chi state");
  } else if (kind == "amps") {
    std::vector<double> re;
    std::vector<double> im;
    for (const std::string& entry : split(arg, ',')) {
      const auto parts = split(entry, ':');
      re.push_back(parse_double(parts.at(0), "amplitude"));
      im.push_back(parts.size() > 1 ? parse_double(parts[1], "amplitude") : 0.0);
    }
    if (re.size() < 2) throw CliFailure{kExitUsage, "amps selector needs >= 2 amplitudes"};
    check(wehrl_state_from_amplitudes(static_cast<int>(re.size()) - 1, re.data(),
                                      im.data(), &raw),
          "explicit state");
  } else if (kind == "eigen") {
    const double idx = parse_double(arg, "eigen selector");
    if (idx < 0 || idx != std::floor(idx)) throw CliFailure{kExitUsage, "bad eigen index"};
    wehrl_floquet* f = nullptr;
    if (c.model == "orthogonal") {
      check(wehrl_floquet_orthogonal(c.two_j, c.p, c.k, &f), "orthogonal top");
    } else if (c.model == "unitary") {
      double k_prime = 0.0;
      check(wehrl_k_prime_eval(c.k_prime_rule.c_str(), c.k, &k_prime), "k-prime rule");
      check(wehrl_floquet_unitary(c.two_j, c.p, c.k, k_prime, &f), "unitary top");
      info["k_prime"] = k_prime;
    } else {
      throw CliFailure{kExitUsage, "model must be orthogonal or unitary"};
    }
    FloquetPtr fp(f);
    wehrl_eigensystem* es = nullptr;
    check(wehrl_eigensystem_create(f, -1.0, &es), "eigendecomposition");
    EigenPtr ep(es);
    check(wehrl_eigensystem_state(es, static_cast<std::size_t>(idx), &raw), "eigenstate");
    std::vector<double> phases(wehrl_eigensystem_dim(es));
    check(wehrl_eigensystem_phases(es, phases.data()), "eigenphases");
    info["eigenphase"] = phases[static_cast<std::size_t>(idx)];
    info["degenerate_spectrum"] = wehrl_eigensystem_degenerate(es) != 0;
  } else {
    throw CliFailure{kExitUsage, "unknown state selector '" + selector + "'"};
  }
  return StatePtr(raw);
}

}  // namespace

namespace {

double state_entropy(const wehrl_state* s, const wehrl_grid_policy& gp,
                     wehrl_entropy_result* out_result = nullptr) {
  wehrl_entropy_result r{};
  check(wehrl_state_entropy(s, &gp, &r), "Wehrl entropy");
  if (out_result != nullptr) *out_result = r;
  return r.entropy;
}

int cmd_table1(const Common& c) {
  const wehrl_grid_policy gp = c.policy(1e-9);
  constexpr double kLimit = 1e-8;
  bool ok = true;
  std::ostringstream csv;
  json rows = json::array();
  csv << "kind,N,j,m,closed_form,quadrature,abs_diff\n";
  auto add = [&](const char* kind, int two_j, const std::string& m, double closed,
                 double quad) {
    const double diff = std::abs(closed - quad);
    if (!(diff <= kLimit)) ok = false;
    csv << kind << ',' << two_j + 1 << ',' << half_integer(two_j) << ',' << m << ','
        << fmt(closed) << ',' << fmt(quad) << ',' << fmt(diff) << '\n';
    rows.push_back({{"kind", kind}, {"N", two_j + 1}, {"j", half_integer(two_j)},
                    {"m", m}, {"closed_form", closed}, {"quadrature", quad},
                    {"abs_diff", diff}});
  };
  for (int two_j = 1; two_j <= 5; ++two_j) {
    double quad_sum = 0.0;
    for (int two_m = two_j; two_m >= -two_j; two_m -= 2) {
      double closed = 0.0;
      check(wehrl_jz_closed(two_j, two_m, &closed), "closed form");
      wehrl_state* raw = nullptr;
      check(wehrl_state_jz(two_j, two_m, &raw), "J_z eigenstate");
      StatePtr s(raw);
      const double quad = state_entropy(s.get(), gp);
      quad_sum += quad;
      // Table rows list m >= 0; S(m) = S(-m).
      if (two_m >= 0) add("state", two_j, half_integer(two_m), closed, quad);
    }
    double mean = 0.0;
    check(wehrl_mean_s_jz(two_j, &mean), "J_z mean");
    add("mean", two_j, "", mean, quad_sum / (two_j + 1));
  }
  if (c.format == "json") {
    const json doc = {{"rows", rows}, {"tolerance", kLimit}, {"pass", ok}};
    emit(c, doc.dump(2) + "\n", nullptr);
  } else {
    emit(c, csv.str(), nullptr);
  }
  if (!ok) std::cerr << "table1: closed form and quadrature differ by more than 1e-8\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_husimi_grid(const Common& c, const std::string& selector, int grid_t,
                    int grid_phi) {
  if (grid_t < 2 || grid_phi < 1) throw CliFailure{kExitUsage, "grid needs >= 2 t rows"};
  json info;
  StatePtr s = select_state(c, selector, info);
  wehrl_entropy_result er{};
  const wehrl_grid_policy gp = c.policy(1e-9);
  state_entropy(s.get(), gp, &er);

  std::ostringstream csv;
  json rows = json::array();
  csv << "t,phi,husimi\n";
  for (int i = 0; i < grid_t; ++i) {
    const double t = -1.0 + 2.0 * i / (grid_t - 1);
    const double theta = std::acos(std::clamp(t, -1.0, 1.0));
    for (int l = 0; l < grid_phi; ++l) {
      const double phi = 2.0 * kPi * l / grid_phi;
      double h = 0.0;
      check(wehrl_state_husimi(s.get(), theta, phi, &h), "Husimi value");
      if (c.format == "json") {
        rows.push_back({t, phi, h});
      } else {
        csv << fmt(t) << ',' << fmt(phi) << ',' << fmt(h) << '\n';
      }
    }
  }
  json meta = {{"command", "husimi-grid"},
               {"config", c.to_json()},
               {"state", info},
               {"dim", wehrl_state_dim(s.get())},
               {"grid_t", grid_t},
               {"grid_phi", grid_phi},
               {"wehrl_entropy", er.entropy},
               {"wehrl_est_error", er.est_error},
               {"tool_version", wehrl_version()},
               {"created", utc_timestamp()}};
  if (c.format == "json") {
    const json doc = {{"columns", {"t", "phi", "husimi"}}, {"rows", rows}};
    emit(c, doc.dump() + "\n", &meta);
  } else {
    emit(c, csv.str(), &meta);
  }
  return kExitOk;
}

int cmd_sweep(const Common& c, double k_min, double k_max, int k_steps) {
  if (k_steps < 1) throw CliFailure{kExitUsage, "--k-steps must be >= 1"};
  wehrl_model model;
  if (c.model == "orthogonal") {
    model = WEHRL_MODEL_ORTHOGONAL;
  } else if (c.model == "unitary") {
    model = WEHRL_MODEL_UNITARY;
  } else {
    throw CliFailure{kExitUsage, "model must be orthogonal or unitary"};
  }
  std::vector<double> ks(k_steps);
  for (int i = 0; i < k_steps; ++i) {
    ks[i] = k_steps == 1 ? k_min : k_min + (k_max - k_min) * i / (k_steps - 1);
  }
  const wehrl_grid_policy gp = c.policy(1e-7);
  std::vector<wehrl_sweep_record> recs(ks.size());
  const auto t0 = std::chrono::steady_clock::now();
  check(wehrl_sweep(c.two_j, c.p, ks.data(), ks.size(), c.k_prime_rule.c_str(), model,
                    &gp, recs.data()),
        "sweep");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const bool any_failed = std::any_of(recs.begin(), recs.end(), [](const auto& r) {
    return r.status != WEHRL_OK;
  });
  std::ostringstream csv;
  json rows = json::array();
  csv << "k,mean_wehrl,mu,degenerate" << (any_failed ? ",error" : "") << '\n';
  for (const wehrl_sweep_record& r : recs) {
    const bool failed = r.status != WEHRL_OK;
    const double mean = failed ? std::nan("") : r.mean_wehrl;
    const double mu = failed || !r.mu_defined ? std::nan("") : r.mu;
    csv << fmt(r.k) << ',' << fmt(mean) << ',' << fmt(mu) << ',' << r.degenerate;
    if (any_failed) {
      std::string err = r.error;
      std::replace(err.begin(), err.end(), ',', ';');
      csv << ',' << err;
    }
    csv << '\n';
    json row = {{"k", r.k},
                {"k_prime", r.k_prime},
                {"mean_wehrl", failed ? json(nullptr) : json(r.mean_wehrl)},
                {"mu", std::isnan(mu) ? json(nullptr) : json(mu)},
                {"degenerate", r.degenerate != 0},
                {"max_est_error", r.max_est_error}};
    if (failed) row["error"] = r.error;
    rows.push_back(row);
  }
  double s_jz = 0.0;
  double s_rand = 0.0;
  check(wehrl_mean_s_jz(c.two_j, &s_jz), "J_z baseline");
  check(wehrl_random_mean_entropy(c.two_j + 1, &s_rand), "random baseline");
  json meta = {{"command", "sweep"},
               {"config", c.to_json()},
               {"k_min", k_min},
               {"k_max", k_max},
               {"k_steps", k_steps},
               {"policy", policy_json(gp)},
               {"baselines", {{"mean_s_jz", s_jz}, {"random_mean", s_rand}}},
               {"records", rows},
               {"tool_version", wehrl_version()},
               {"timings", {{"total_seconds", seconds}}},
               {"created", utc_timestamp()}};
  if (c.format == "json") {
    emit(c, json{{"rows", rows}}.dump(2) + "\n", &meta);
  } else {
    emit(c, csv.str(), &meta);
  }
  return any_failed ? kExitNumerical : kExitOk;
}

void emit_report(const Common& c, const std::vector<std::pair<std::string, json>>& items) {
  if (c.format == "json") {
    json doc = json::object();
    for (const auto& [k, v] : items) doc[k] = v;
    emit(c, doc.dump(2) + "\n", nullptr);
    return;
  }
  std::ostringstream out;
  out << "key,value\n";
  for (const auto& [k, v] : items) {
    out << k << ',' << (v.is_number_float() ? fmt(v.get<double>()) : v.dump()) << '\n';
  }
  emit(c, out.str(), nullptr);
}

int cmd_min3(const Common& c) {
  const double tol = c.tol_set ? c.tol : 1e-8;
  double chi = 0.0;
  double s = 0.0;
  check(wehrl_minimize_chi(tol, &chi, &s), "minimization");
  double s_jz = 0.0;
  check(wehrl_mean_s_jz(2, &s_jz), "J_z mean");
  const double reference = 1.0 - std::log(9.0 / 4.0) / 3.0;
  emit_report(c, {{"tolerance", tol},
                  {"chi_star", chi},
                  {"chi_star_minus_pi_over_4", chi - kPi / 4.0},
                  {"s_star", s},
                  {"reference_1_minus_ln_9_4_over_3", reference},
                  {"s_star_minus_reference", s - reference},
                  {"mean_s_jz_n3", s_jz},
                  {"s_star_below_mean_s_jz", s < s_jz}});
  return kExitOk;
}

int cmd_random_mean(const Common& c, int samples) {
  if (samples < 1) throw CliFailure{kExitUsage, "--samples must be >= 1"};
  const wehrl_grid_policy gp = c.policy(1e-6);
  double exact = 0.0;
  check(wehrl_random_mean_entropy(c.two_j + 1, &exact), "exact mean");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < samples; ++i) {
    wehrl_state* raw = nullptr;
    check(wehrl_state_haar(c.two_j, c.seed + static_cast<std::uint64_t>(i), &raw),
          "random state");
    StatePtr st(raw);
    const double e = state_entropy(st.get(), gp);
    sum += e;
    sum_sq += e * e;
  }
  const double mean = sum / samples;
  const double var =
      samples > 1 ? std::max(0.0, (sum_sq - samples * mean * mean) / (samples - 1)) : 0.0;
  const double se = std::sqrt(var / samples);
  const double z = se > 0.0 ? (mean - exact) / se : 0.0;
  emit_report(c, {{"N", c.two_j + 1},
                  {"samples", samples},
                  {"seed", c.seed},
                  {"exact", exact},
                  {"estimate", mean},
                  {"sample_variance", var},
                  {"std_error", se},
                  {"z_score", z}});
  return kExitOk;
}

int cmd_zeros(const Common& c, const std::string& selector) {
  json info;
  StatePtr s = select_state(c, selector, info);
  std::size_t count = 0;
  check(wehrl_state_zeros(s.get(), 0.0, 0, nullptr, nullptr, nullptr, &count), "zeros");
  std::vector<double> theta(count);
  std::vector<double> phi(count);
  std::vector<int> mult(count);
  check(wehrl_state_zeros(s.get(), 0.0, count, theta.data(), phi.data(), mult.data(),
                          &count),
        "zeros");
  bool ok = true;
  std::ostringstream csv;
  json rows = json::array();
  csv << "theta,phi,multiplicity,cos_theta,husimi\n";
  for (std::size_t i = 0; i < count; ++i) {
    double h = 0.0;
    check(wehrl_state_husimi(s.get(), theta[i], phi[i], &h), "Husimi value");
    if (!(h < 1e-10)) ok = false;
    csv << fmt(theta[i]) << ',' << fmt(phi[i]) << ',' << mult[i] << ','
        << fmt(std::cos(theta[i])) << ',' << fmt(h) << '\n';
    rows.push_back({{"theta", theta[i]}, {"phi", phi[i]}, {"multiplicity", mult[i]},
                    {"cos_theta", std::cos(theta[i])}, {"husimi", h}});
  }
  if (c.format == "json") {
    emit(c, json{{"state", info}, {"zeros", rows}, {"verified", ok}}.dump(2) + "\n",
         nullptr);
  } else {
    emit(c, csv.str(), nullptr);
  }
  if (!ok) std::cerr << "zeros: Husimi value at a reported zero exceeds 1e-10\n";
  return ok ? kExitOk : kExitNumerical;
}

// Invariant suite over the spin-core and entropy layers.
int cmd_coh_check(const Common& c) {
  int failures = 0;
  const wehrl_grid_policy gp = c.policy(1e-9);
  auto report = [&](const std::string& name, bool pass, double worst) {
    if (!pass) ++failures;
    std::cout << (pass ? "PASS " : "FAIL ") << name << " worst=" << fmt(worst) << '\n';
  };
  auto make = [](wehrl_status s, wehrl_state*& raw, const char* what) {
    check(s, what);
    return StatePtr(raw);
  };
  const double points[][2] = {{0.3, 1.1}, {1.9, 4.0}, {2.8, 0.2}};

  double worst = 0.0;
  for (int two_j = 1; two_j <= 9; ++two_j) {
    for (const auto& pt : points) {
      wehrl_state* raw = nullptr;
      StatePtr s = make(wehrl_state_coherent(two_j, pt[0], pt[1], &raw), raw, "coherent");
      const double n = two_j + 1;
      worst = std::max(worst, std::abs(state_entropy(s.get(), gp) - (n - 1) / n));
    }
  }
  report("coherent-entropy", worst < 1e-8, worst);

  worst = 0.0;
  for (int two_j = 1; two_j <= 9; ++two_j) {
    for (const auto& pt : points) {
      wehrl_state* raw = nullptr;
      StatePtr s = make(wehrl_state_coherent(two_j, pt[0], pt[1], &raw), raw, "coherent");
      double h = 0.0;
      check(wehrl_state_husimi(s.get(), kPi - pt[0], pt[1] + kPi, &h), "husimi");
      worst = std::max(worst, h);
    }
  }
  report("antipodal-zero", worst < 1e-12, worst);

  worst = 0.0;
  for (int two_j = 1; two_j <= 7; ++two_j) {
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      wehrl_state* raw = nullptr;
      StatePtr s = make(wehrl_state_jz(two_j, two_m, &raw), raw, "jz");
      const int down = (two_j - two_m) / 2;
      const double log_binom = std::lgamma(two_j + 1.0) - std::lgamma(down + 1.0) -
                               std::lgamma(two_j - down + 1.0);
      for (int i = 0; i < 100; ++i) {
        const double th = std::min(kPi, kPi * i / 99.0);
        const double sh = std::sin(0.5 * th);
        const double ch = std::cos(0.5 * th);
        const double expected = std::exp(log_binom) * std::pow(sh, 2 * down) *
                                std::pow(ch, 2 * (two_j - down));
        double h = 0.0;
        check(wehrl_state_husimi(s.get(), th, 0.7, &h), "husimi");
        worst = std::max(worst, std::abs(h - expected));
      }
    }
  }
  report("jz-husimi-closed-form", worst < 1e-10, worst);

  double total = 0.0;
  check(wehrl_grid_total_weight(2, 32, 32, &total), "grid");
  report("grid-total-weight", std::abs(total - 3.0) < 1e-12, std::abs(total - 3.0));

  double residual = 0.0;
  check(wehrl_grid_identity_residual(61, 256, 256, &residual), "identity resolution");
  report("identity-resolution-n62", residual < 1e-8, residual);

  worst = 0.0;
  for (int two_j : {1, 2, 9}) {
    const int n = two_j + 1;
    std::vector<double> re(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) re[static_cast<std::size_t>(i) * n + i] = 1.0 / n;
    wehrl_entropy_result r{};
    check(wehrl_density_entropy(two_j, re.data(), nullptr, &gp, &r), "mixed entropy");
    worst = std::max(worst, std::abs(r.entropy - std::log(n)));
  }
  report("maximally-mixed-entropy", worst < 1e-9, worst);

  worst = 0.0;
  for (int two_j = 2; two_j <= 9; ++two_j) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      wehrl_state* raw = nullptr;
      StatePtr s = make(wehrl_state_haar(two_j, c.seed + seed, &raw), raw, "random");
      std::size_t count = 0;
      check(wehrl_state_zeros(s.get(), 0.0, 0, nullptr, nullptr, nullptr, &count), "zeros");
      std::vector<double> th(count);
      std::vector<double> ph(count);
      std::vector<int> mu(count);
      check(wehrl_state_zeros(s.get(), 0.0, count, th.data(), ph.data(), mu.data(), &count),
            "zeros");
      wehrl_state* back_raw = nullptr;
      StatePtr back = make(wehrl_state_from_zeros(two_j, count, th.data(), ph.data(),
                                                  mu.data(), &back_raw),
                           back_raw, "from zeros");
      double f = 0.0;
      check(wehrl_state_fidelity(s.get(), back.get(), &f), "fidelity");
      worst = std::max(worst, 1.0 - f);
    }
  }
  report("stellar-round-trip", worst < 1e-8, worst);

  worst = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double omega = kPi * i / 200.0;
    worst = std::max(worst,
                     std::abs(wehrl_lee_two_zero(omega) - wehrl_scutaru_two_zero(omega)));
  }
  report("lee-scutaru-identity", worst < 1e-12, worst);

  std::cout << (failures == 0 ? "all checks passed" : "checks failed: " + std::to_string(failures))
            << '\n';
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mean Wehrl entropy and phase-space localization of spin states"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--two-j", c.two_j, "Twice the spin quantum number (N = two_j + 1)");
  app.add_option("--p", c.p, "Precession angle p of the kicked top (radians)");
  app.add_option("--k", c.k, "Kick strength k");
  app.add_option("--k-prime-rule", c.k_prime_rule,
                 "Second kick strength as an expression in k, e.g. k/2");
  app.add_option("--model", c.model, "Kicked-top model")
      ->check(CLI::IsMember({"orthogonal", "unitary"}));
  app.add_option("--n-theta", c.n_theta, "Initial Gauss-Legendre nodes (0 = default)");
  app.add_option("--n-phi", c.n_phi, "Initial azimuthal nodes (0 = default)");
  app.add_option("--tol", c.tol, "Tolerance (quadrature, or search for min3)")
      ->each([&](const std::string&) { c.tol_set = true; });
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--out", c.out, "Output file (default stdout)");
  app.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* table1 = app.add_subcommand("table1", "J_z eigenstate entropies, exact vs quadrature");
  auto* husimi = app.add_subcommand("husimi-grid", "Husimi function on a (t, phi) grid");
  std::string selector;
  int grid_t = 200;
  int grid_phi = 200;
  husimi->add_option("--state", selector,
                     "jz:<two_m> | coherent:<theta>,<phi> | eigen:<index> | haar | "
                     "chi:<chi>:<fixed|minus|plus> | amps:<re>:<im>,...")
      ->required();
  husimi->add_option("--grid-t", grid_t, "Rows uniform in t = cos(theta) on [-1, 1]");
  husimi->add_option("--grid-phi", grid_phi, "Columns uniform in phi on [0, 2 pi)");

  auto* sweep = app.add_subcommand("sweep", "Mean Wehrl entropy and mu versus kick strength");
  double k_min = 0.0;
  double k_max = 10.0;
  int k_steps = 21;
  sweep->add_option("--k-min", k_min);
  sweep->add_option("--k-max", k_max);
  sweep->add_option("--k-steps", k_steps, "Number of k values, endpoints included");

  auto* min3 = app.add_subcommand("min3", "Minimal mean entropy of the spin-1 chi basis family");
  auto* random_mean = app.add_subcommand("random-mean", "Monte-Carlo check of the random-state mean");
  int samples = 2000;
  random_mean->add_option("--samples", samples);

  auto* zeros = app.add_subcommand("zeros", "Stellar representation (Husimi zeros) of a state");
  zeros->add_option("--state", selector, "State selector, as for husimi-grid")->required();

  auto* coh_check = app.add_subcommand("coh-check", "Invariant suite for states and entropies");

  for (CLI::App* sub : {table1, husimi, sweep, min3, random_mean, zeros, coh_check}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table1) return cmd_table1(c);
    if (*husimi) return cmd_husimi_grid(c, selector, grid_t, grid_phi);
    if (*sweep) return cmd_sweep(c, k_min, k_max, k_steps);
    if (*min3) return cmd_min3(c);
    if (*random_mean) return cmd_random_mean(c, samples);
    if (*zeros) return cmd_zeros(c, selector);
    if (*coh_check) return cmd_coh_check(c);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }
  return kExitUsage;
}
