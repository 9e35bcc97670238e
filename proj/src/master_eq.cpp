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

#include "gravclocks/master_eq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gravclocks/metrics.hpp"
#include "gravclocks/parallel.hpp"

namespace gravclocks {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kStepsPerScale = 200.0;
// Relative errors below this are treated as integrator noise in the exponent fit.
constexpr double kErrorFloor = 1e-9;

Complex kernel_value(MemoryKernel kernel, double w, double tau) {
  if (kernel == MemoryKernel::kInteractionFrame || w == 0.0) return tau;
  // (1 - exp(-i w tau)) / (i w); use the series near w tau = 0.
  const double x = w * tau;
  if (std::abs(x) < 1e-4) return Complex(tau * (1.0 - x * x / 6.0), -0.5 * tau * x);
  return (Complex(1.0) - std::polar(1.0, -std::fmod(x, kTwoPi))) / Complex(0.0, w);
}

}  // namespace

MasterEqParams MasterEqParams::coherent(SpinSpace a, double eps, double xi, MemoryKernel kernel) {
  MasterEqParams p;
  p.a = a;
  p.eps_a = eps;
  p.eps_b = eps;
  p.xi = xi;
  p.energy_spread_a = std::sqrt(0.5 * a.j()) * eps;
  p.kernel = kernel;
  return p;
}

double default_master_step(const MasterEqParams& params, SpinSpace b) {
  double scale = std::numeric_limits<double>::infinity();
  const double w_max = b.two_j() * params.eps_b * std::abs(params.rate_factor());
  if (w_max > 0.0) scale = kTwoPi / w_max;
  if (params.a.two_j() > 0 && params.eps_a > 0.0 && params.gravity != 0.0)
    scale = std::min(scale, tau_star(params.a.j(), params.eps_a, params.xi / std::abs(params.gravity)));
  if (!std::isfinite(scale)) return std::numeric_limits<double>::infinity();
  return scale / kStepsPerScale;
}

Trajectory<DensityMatrix> integrate_master_equation(const DensityMatrix& rho0,
                                                    const MasterEqParams& params,
                                                    std::span<const double> tau_grid,
                                                    const MasterEqOptions& options) {
  validate_density_matrix(rho0);
  if (tau_grid.empty() || tau_grid.front() != 0.0)
    throw std::invalid_argument("integrate_master_equation: grid must start at 0");
  for (std::size_t i = 1; i < tau_grid.size(); ++i)
    if (!(tau_grid[i] > tau_grid[i - 1]))
      throw std::invalid_argument("integrate_master_equation: grid must be strictly ascending");
  if (!(params.xi > 0.0)) throw std::domain_error("integrate_master_equation: xi must be positive");

  const auto d = rho0.rows();
  const SpinSpace b(static_cast<int>(d) - 1);
  const double h_max = options.max_step.value_or(default_master_step(params, b));
  if (!(h_max > 0.0)) throw std::invalid_argument("integrate_master_equation: step must be positive");
  const double r = params.rate_factor();
  const double kappa = params.decoherence_coefficient();

  const std::size_t nt = tau_grid.size();
  std::vector<Complex> values(nt * static_cast<std::size_t>(d * d));
  parallel_for(static_cast<std::size_t>(d * d), options.jobs, [&](std::size_t idx) {
    const auto m = static_cast<Eigen::Index>(idx) / d, n = static_cast<Eigen::Index>(idx) % d;
    const double w = static_cast<double>(m - n) * params.eps_b;
    // rho_mn = exp(-i w r t) u: the precession is applied exactly and RK4
    // integrates only the kernel term.
    auto rhs = [&](double t, Complex u) { return -kappa * w * w * kernel_value(params.kernel, w, t) * u; };
    Complex y = rho0(m, n);
    values[idx] = y;
    for (std::size_t i = 1; i < nt; ++i) {
      const double t0 = tau_grid[i - 1], span = tau_grid[i] - t0;
      const double steps = std::isfinite(h_max) ? std::max(1.0, std::ceil(span / h_max)) : 1.0;
      const double h = span / steps;
      for (long s = 0; s < static_cast<long>(steps); ++s) {
        const double t = t0 + static_cast<double>(s) * h;
        const Complex k1 = rhs(t, y);
        const Complex k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1);
        const Complex k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2);
        const Complex k4 = rhs(t + h, y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
      values[i * static_cast<std::size_t>(d * d) + idx] = y * phase_factor(tau_grid[i], w * r);
    }
  });

  Trajectory<DensityMatrix> traj;
  for (std::size_t i = 0; i < nt; ++i) {
    DensityMatrix rho(d, d);
    for (Eigen::Index m = 0; m < d; ++m)
      for (Eigen::Index n = 0; n < d; ++n)
        rho(m, n) = values[i * static_cast<std::size_t>(d * d) + static_cast<std::size_t>(m * d + n)];
    traj.push(tau_grid[i], std::move(rho));
  }
  return traj;
}

MasterExactComparison compare_master_vs_exact(const MasterEqParams& params, SpinSpace b,
                                              std::span<const double> tau_grid,
                                              const MasterEqOptions& options) {
  if (b.two_j() < 1) throw std::invalid_argument("compare_master_vs_exact: clock B needs j >= 1/2");
  const StateVector psi_b = coherent_state(b, std::numbers::pi / 2, 0.0);
  const Trajectory<DensityMatrix> traj = integrate_master_equation(projector(psi_b), params, tau_grid, options);

  MasterExactComparison cmp;
  std::vector<double> log_t, log_e;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double tau = traj.times[i];
    const DensityMatrix exact =
        reduced_b_coherent_closed_form(params.a, b, params.eps_a, params.eps_b, params.xi, tau, params.gravity);
    const double me = std::abs(traj.states[i](0, 1));
    const double ex = std::abs(exact(0, 1));
    const double err = ex > 0.0 ? std::abs(me - ex) / ex : std::abs(me - ex);
    cmp.times.push_back(tau);
    cmp.master_coherence.push_back(me);
    cmp.exact_coherence.push_back(ex);
    cmp.relative_error.push_back(err);
    cmp.max_trace_defect = std::max(cmp.max_trace_defect, std::abs(traj.states[i].trace() - Complex(1.0)));
    cmp.max_hermiticity_defect = std::max(cmp.max_hermiticity_defect, hermiticity_defect(traj.states[i]));
    if (tau > 0.0 && err > kErrorFloor) {
      log_t.push_back(std::log(tau));
      log_e.push_back(std::log(err));
    }
  }
  if (log_t.size() < 2) {
    cmp.growth_exponent = std::numeric_limits<double>::quiet_NaN();
  } else {
    const double n = static_cast<double>(log_t.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < log_t.size(); ++i) {
      sx += log_t[i];
      sy += log_e[i];
      sxx += log_t[i] * log_t[i];
      sxy += log_t[i] * log_e[i];
    }
    cmp.growth_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return cmp;
}

}  // namespace gravclocks
