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

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gravclocks/evolution.hpp"
#include "gravclocks/spin_algebra.hpp"

namespace gravclocks {

/// Second-order reduced dynamics of clock B coupled to clock A through
/// lambda H_A H_B. With H_B diagonal, each element rho_mn (w = E_m - E_n)
/// obeys the scalar equation
///
///   d rho_mn / dtau = -i w r rho_mn - kappa w^2 K_mn(tau) rho_mn,
///
///   r     = 1 + lambda <H_A>                  (mean-field rate of B)
///   kappa = (lambda Delta E_A)^2              (energy variance of A)
///   K_mn  = memory kernel, see MemoryKernel.
enum class MemoryKernel {
  /// rho under the memory integral taken in the frame co-rotating with
  /// H_B + lambda <H_A> H_B, evaluated at the current time: K = tau.
  kInteractionFrame,
  /// Double commutator conjugated by exp(-i s H_B) with the Schroedinger
  /// state at the current time: K = (1 - exp(-i w tau)) / (i w).
  kConjugatedPhase,
};

struct MasterEqParams {
  SpinSpace a{1};
  double eps_a = 0.0;
  double eps_b = 0.0;
  double xi = 1.0;
  double gravity = 1.0;
  /// Energy spread of A; sqrt(jA/2) eps_a for an equatorial coherent state.
  double energy_spread_a = 0.0;
  MemoryKernel kernel = MemoryKernel::kInteractionFrame;

  /// A in the equatorial coherent state, both clocks with gap eps.
  static MasterEqParams coherent(SpinSpace a, double eps, double xi,
                                 MemoryKernel kernel = MemoryKernel::kInteractionFrame);

  double lambda() const { return -gravity / xi; }
  double mean_energy_a() const { return a.j() * eps_a; }
  double rate_factor() const { return 1.0 + lambda() * mean_energy_a(); }
  double decoherence_coefficient() const {
    const double v = lambda() * energy_spread_a;
    return v * v;
  }
};

struct MasterEqOptions {
  /// Overrides the default step min(fastest period, tau_star) / 200.
  std::optional<double> max_step;
  std::size_t jobs = 1;
};

/// Fixed-step RK4 integration of every matrix element, with the precession
/// factor exp(-i w r tau) applied exactly. rho0 must be a valid
/// density matrix on B (std::invalid_argument otherwise); the grid must be
/// ascending and start at 0.
Trajectory<DensityMatrix> integrate_master_equation(const DensityMatrix& rho0,
                                                    const MasterEqParams& params,
                                                    std::span<const double> tau_grid,
                                                    const MasterEqOptions& options = {});

/// Default fixed step for the given B dimension.
double default_master_step(const MasterEqParams& params, SpinSpace b);

struct MasterExactComparison {
  std::vector<double> times;
  std::vector<double> master_coherence;  // |rho_01| from the master equation
  std::vector<double> exact_coherence;   // |rho_01| from the closed-form reduced state
  std::vector<double> relative_error;
  /// Least-squares slope of log(error) against log(tau) over points with
  /// error above the integrator noise floor; NaN if fewer than two remain.
  double growth_exponent = 0.0;
  double max_trace_defect = 0.0;
  double max_hermiticity_defect = 0.0;
};

/// Starts B in the equatorial coherent state |pi/2, 0, jB> and compares the
/// master-equation coherence against the exact reduced dynamics.
MasterExactComparison compare_master_vs_exact(const MasterEqParams& params, SpinSpace b,
                                              std::span<const double> tau_grid,
                                              const MasterEqOptions& options = {});

}  // namespace gravclocks
