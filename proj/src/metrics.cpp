// Copyright 2026 The gravclocks Authors
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

#include "gravclocks/metrics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gravclocks/parallel.hpp"

namespace gravclocks {

namespace {

constexpr double kPi = std::numbers::pi;

// log|cos x| computed as log1p(-sin^2 x) / 2, accurate for small x.
double log_abs_cos(double x) {
  const double s = std::sin(x);
  return 0.5 * std::log1p(-s * s);
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::domain_error(std::string(what) + " must be positive");
}

}  // namespace

double visibility(const DensityMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2)
    throw std::invalid_argument("visibility: a 2x2 density matrix is required");
  return 2.0 * std::abs(rho(0, 1));
}

double visibility_closed_form(double n_others, double tau, double eps, double xi) {
  require_positive(xi, "xi");
  const double theta = tau * eps * eps / xi;
  const double lc = log_abs_cos(0.5 * theta);
  if (!std::isfinite(lc)) return 0.0;
  // (1 + cos theta)/2 = cos^2(theta/2)
  return std::exp(2.0 * n_others * lc);
}

double visibility_gaussian_approx(double n_others, double tau, double eps, double xi) {
  require_positive(xi, "xi");
  const double arg = std::sqrt(n_others) * tau * eps * eps / (2.0 * xi);
  return std::exp(-arg * arg);
}

double tau_mix(double eps, double xi) {
  require_positive(eps, "energy gap");
  return kPi * xi / (eps * eps);
}

double t_mix(double dE, double x, const PhysicalScales& s) {
  const auto p = to_dimensionless(0.0, dE, x, s);
  return to_seconds(tau_mix(p.epsilon, p.xi), s);
}

double tau_d(double n_others, double eps, double xi) {
  require_positive(n_others, "N");
  require_positive(eps, "energy gap");
  return 2.0 * xi / (std::sqrt(n_others) * eps * eps);
}

double t_d(double n_others, double dE, double x, const PhysicalScales& s) {
  const auto p = to_dimensionless(0.0, dE, x, s);
  return to_seconds(tau_d(n_others, p.epsilon, p.xi), s);
}

double tau_star(double jA, double eps, double xi) {
  require_positive(jA, "jA");
  require_positive(eps, "energy gap");
  return xi / (std::sqrt(2.0 * jA) * eps * eps);
}

double t_star(double jA, double dE, double x, const PhysicalScales& s) {
  const auto p = to_dimensionless(0.0, dE, x, s);
  return to_seconds(tau_star(jA, p.epsilon, p.xi), s);
}

double effective_phase_spread(double jA, double eps, double xi, double tau) {
  require_positive(xi, "xi");
  return std::sqrt(2.0 * jA) * eps * eps * tau / xi;
}

double effective_phase_spread(double jA, double dE, double x, double t, const PhysicalScales& s) {
  const auto p = to_dimensionless(t, dE, x, s);
  return effective_phase_spread(jA, p.epsilon, p.xi, p.tau);
}

UncertaintyProduct heuristic_uncertainty_product(double eps, double xi, double tau) {
  require_positive(eps, "energy gap");
  require_positive(xi, "xi");
  UncertaintyProduct u;
  u.t_perp = kPi / eps;
  u.delta_t = tau * eps / xi;
  u.product = u.t_perp * u.delta_t;
  return u;
}

UncertaintyProduct heuristic_uncertainty_product(double dE, double x, double t,
                                                 const PhysicalScales& s) {
  const auto p = to_dimensionless(t, dE, x, s);
  const UncertaintyProduct d = heuristic_uncertainty_product(p.epsilon, p.xi, p.tau);
  const double tp = s.planck_time();
  return {d.t_perp * tp, d.delta_t * tp, d.product * tp * tp};
}

double schwarzschild_radius(double n_particles, double dE, const PhysicalScales& s) {
  if (!(n_particles >= 0.0) || !(dE >= 0.0))
    throw std::domain_error("schwarzschild_radius: N and dE must be non-negative");
  // r = 2 G N dE / c^4 = 2 l_P (N dE / E_P)
  return 2.0 * s.planck_length() * n_particles * to_epsilon(dE, s);
}

std::vector<double> DecoherenceMapConfig::log_spaced(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi >= lo) || n == 0)
    throw std::invalid_argument("log_spaced: need 0 < lo <= hi and n >= 1");
  std::vector<double> g(n);
  const double a = std::log10(lo), b = std::log10(hi);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = n == 1 ? lo : std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  if (n > 1) {
    g.front() = lo;
    g.back() = hi;
  }
  return g;
}

void DecoherenceMapConfig::validate() const {
  auto check = [](const std::vector<double>& g, const char* name) {
    if (g.empty()) throw std::invalid_argument(std::string(name) + " grid is empty");
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!(g[i] > 0.0) || !std::isfinite(g[i]))
        throw std::invalid_argument(std::string(name) + " grid must be positive");
      if (i > 0 && !(g[i] > g[i - 1]))
        throw std::invalid_argument(std::string(name) + " grid must be strictly ascending");
    }
  };
  check(dE_grid, "energy");
  check(x_grid, "distance");
  if (!(n_others >= 1.0)) throw std::invalid_argument("decoherence map: N must be >= 1");
}

DecoherenceMap decoherence_map(const DecoherenceMapConfig& cfg, const PhysicalScales& scales,
                               std::size_t jobs) {
  cfg.validate();
  DecoherenceMap map{cfg, Eigen::MatrixXd(static_cast<Eigen::Index>(cfg.x_grid.size()),
                                          static_cast<Eigen::Index>(cfg.dE_grid.size()))};
  const std::size_t cols = cfg.dE_grid.size();
  parallel_for(cfg.x_grid.size() * cols, jobs, [&](std::size_t idx) {
    const std::size_t r = idx / cols, c = idx % cols;
    map.t_d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
        t_d(cfg.n_others, cfg.dE_grid[c], cfg.x_grid[r], scales);
  });
  return map;
}

std::vector<ContourPoint> extract_contour(const DecoherenceMap& map, double level_seconds) {
  require_positive(level_seconds, "contour level");
  const double target = std::log10(level_seconds);
  const auto& xs = map.config.x_grid;
  std::vector<ContourPoint> out;
  for (std::size_t c = 0; c < map.config.dE_grid.size(); ++c) {
    for (std::size_t r = 0; r + 1 < xs.size(); ++r) {
      const double f0 = std::log10(map.t_d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c))) - target;
      const double f1 = std::log10(map.t_d(static_cast<Eigen::Index>(r + 1), static_cast<Eigen::Index>(c))) - target;
      if (f0 == 0.0 || (f0 < 0.0) != (f1 < 0.0)) {
        const double lx0 = std::log10(xs[r]), lx1 = std::log10(xs[r + 1]);
        const double lx = f0 == f1 ? lx0 : lx0 + (lx1 - lx0) * (-f0) / (f1 - f0);
        out.push_back({map.config.dE_grid[c], std::pow(10.0, lx)});
        break;
      }
    }
  }
  return out;
}

double observer_phase_argument(double eps_obs, double eps_source, double tau, double xi_r) {
  require_positive(xi_r, "observer distance");
  return 2.0 * eps_source * eps_obs * tau / xi_r;
}

double observer_overlap(double j, double eps_obs, double eps_source, double tau, double xi_r) {
  const double arg = observer_phase_argument(eps_obs, eps_source, tau, xi_r);
  const double lc = log_abs_cos(0.5 * arg);
  if (!std::isfinite(lc)) return 0.0;
  // ((1 + cos a)/2)^{2j} = cos^{4j}(a/2)
  return std::exp(4.0 * j * lc);
}

double observer_overlap(double j, double eps_obs, double dE, double t, double r,
                        const PhysicalScales& s) {
  const auto p = to_dimensionless(t, dE, r, s);
  return observer_overlap(j, to_epsilon(eps_obs, s), p.epsilon, p.tau, p.xi);
}

double observer_overlap_quadratic(double j, double arg) { return 1.0 - 0.5 * j * arg * arg; }

double min_observer_distance(double delta, double j, double eps_obs, double eps_source, double tau) {
  if (!(delta > 0.0 && delta <= 1.0)) throw std::domain_error("delta must lie in (0, 1]");
  return 2.0 * std::sqrt(2.0 * j) * eps_source * eps_obs * tau / std::sqrt(delta);
}

double min_observer_distance(double delta, double j, double eps_obs, double dE, double t,
                             const PhysicalScales& s) {
  const auto p = to_dimensionless(t, dE, 1.0, s);
  return to_meters(min_observer_distance(delta, j, to_epsilon(eps_obs, s), p.epsilon, p.tau), s);
}

double min_observer_distance_exact(double delta, double j, double eps_obs, double eps_source,
                                   double tau) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("delta must lie in (0, 1)");
  require_positive(j, "j");
  // cos^{4j}(a/2) = 1 - delta
  const double a = 2.0 * std::acos(std::exp(std::log1p(-delta) / (4.0 * j)));
  return 2.0 * eps_source * eps_obs * tau / a;
}

double entanglement_entropy(const DensityMatrix& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("entanglement_entropy: rho must be square");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()[i];
    if (p > std::numeric_limits<double>::min()) s -= p * std::log2(p);
  }
  return s;
}

}  // namespace gravclocks
