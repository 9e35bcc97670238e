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

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "gravclocks/spin_algebra.hpp"
#include "gravclocks/units.hpp"

namespace gravclocks {

// Coherence diagnostics and characteristic timescales. Functions without a
// PhysicalScales argument take and return Planck-unit quantities
// (tau, epsilon, xi); the overloads taking scales accept SI values and
// convert at the boundary.

/// 2 |rho_01| of a qubit; throws std::invalid_argument unless rho is 2x2.
double visibility(const DensityMatrix& rho);

/// [(1 + cos(tau eps^2 / xi)) / 2]^N evaluated as exp(N log(.)) so that
/// N = 1e23 neither underflows by iteration nor loses precision near V = 1.
double visibility_closed_form(double n_others, double tau, double eps, double xi);

/// exp(-(sqrt(N) tau eps^2 / (2 xi))^2), valid while the argument is small.
double visibility_gaussian_approx(double n_others, double tau, double eps, double xi);

/// Time of maximal two-clock entanglement: pi xi / eps^2.
double tau_mix(double eps, double xi);
double t_mix(double dE, double x, const PhysicalScales& scales);

/// Decoherence time of one clock among N others: 2 xi / (sqrt(N) eps^2).
double tau_d(double n_others, double eps, double xi);
double t_d(double n_others, double dE, double x, const PhysicalScales& scales);

/// Separation time of the coherent-state branches: xi / (sqrt(2 jA) eps^2).
double tau_star(double jA, double eps, double xi);
double t_star(double jA, double dE, double x, const PhysicalScales& scales);

/// Effective angular spread sqrt(2 jA) eps^2 tau / xi = tau / tau_star.
double effective_phase_spread(double jA, double eps, double xi, double tau);
double effective_phase_spread(double jA, double dE, double x, double t, const PhysicalScales& scales);

struct UncertaintyProduct {
  double t_perp = 0.0;   // orthogonalisation time
  double delta_t = 0.0;  // spread of the induced time dilation
  double product = 0.0;
};
/// t_perp = pi / eps, delta_t = tau eps / xi; the product pi tau / xi does
/// not depend on eps.
UncertaintyProduct heuristic_uncertainty_product(double eps, double xi, double tau);
UncertaintyProduct heuristic_uncertainty_product(double dE, double x, double t,
                                                 const PhysicalScales& scales);

/// 2 G M / c^2 with M = N dE / c^2. Returns metres.
double schwarzschild_radius(double n_particles, double dE, const PhysicalScales& scales);

struct DecoherenceMapConfig {
  std::vector<double> dE_grid;  // J, ascending, positive
  std::vector<double> x_grid;   // m, ascending, positive
  double n_others = 1.0;

  static std::vector<double> log_spaced(double lo, double hi, std::size_t n);
  /// Throws std::invalid_argument on empty, non-positive or non-ascending grids.
  void validate() const;
};

struct DecoherenceMap {
  DecoherenceMapConfig config;
  /// t_d in seconds; rows follow x_grid, columns follow dE_grid.
  Eigen::MatrixXd t_d;
};

DecoherenceMap decoherence_map(const DecoherenceMapConfig& cfg, const PhysicalScales& scales,
                               std::size_t jobs = 1);

struct ContourPoint {
  double dE = 0.0;  // J
  double x = 0.0;   // m
};
/// Iso-line t_d = level, one point per energy column where the level is
/// crossed, found by linear interpolation of log10 t_d in log10 x.
std::vector<ContourPoint> extract_contour(const DecoherenceMap& map, double level_seconds);

/// Phase separation 2 eps_source eps_obs tau / xi_r seen by an observer clock
/// at distance xi_r when the sources switch from ground to excited state.
double observer_phase_argument(double eps_obs, double eps_source, double tau, double xi_r);

/// |<psi_00|psi_11>|^2 = ((1 + cos arg) / 2)^{2j} for a spin-j observer clock.
double observer_overlap(double j, double eps_obs, double eps_source, double tau, double xi_r);
double observer_overlap(double j, double eps_obs, double dE, double t, double r,
                        const PhysicalScales& scales);

/// Second-order Taylor expansion of observer_overlap in the argument:
/// 1 - j arg^2 / 2.
double observer_overlap_quadratic(double j, double arg);

/// Distance bound 2 sqrt(2j) eps_source eps_obs tau / sqrt(delta) (Planck
/// lengths). Beyond it the two observer states overlap by at least 1 - delta.
double min_observer_distance(double delta, double j, double eps_obs, double eps_source, double tau);
double min_observer_distance(double delta, double j, double eps_obs, double dE, double t,
                             const PhysicalScales& scales);
/// Distance at which the exact overlap equals 1 - delta.
double min_observer_distance_exact(double delta, double j, double eps_obs, double eps_source,
                                   double tau);

/// Von Neumann entropy in bits.
double entanglement_entropy(const DensityMatrix& rho);

}  // namespace gravclocks
