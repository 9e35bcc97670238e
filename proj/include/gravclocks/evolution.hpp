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
#include <span>
#include <stdexcept>
#include <vector>

#include "gravclocks/hamiltonians.hpp"
#include "gravclocks/spin_algebra.hpp"

namespace gravclocks {

/// Ascending time grid with one snapshot per time.
template <typename Snapshot>
struct Trajectory {
  std::vector<double> times;
  std::vector<Snapshot> states;

  void push(double t, Snapshot s) {
    if (!times.empty() && !(t > times.back()))
      throw std::invalid_argument("Trajectory: times must be strictly increasing");
    times.push_back(t);
    states.push_back(std::move(s));
  }
  std::size_t size() const { return times.size(); }
};

/// Largest product dimension handled by the dense brute-force engine.
inline constexpr std::uint64_t kBruteForceDimLimit = std::uint64_t{1} << 20;

/// exp(-i tau E) with tau*E reduced mod 2pi in extended precision.
Complex phase_factor(double tau, double energy);

/// Multiply the amplitude of every label by exp(-i tau E(label)).
/// Throws std::invalid_argument on dimension mismatch and std::length_error
/// above kBruteForceDimLimit.
StateVector evolve_exact(const StateVector& psi0, const DiagonalHamiltonian& H, double tau);

/// Reduced state on the clocks listed in `keep` (any order; result uses
/// ascending clock order). Throws std::out_of_range for a bad index.
DensityMatrix partial_trace(const StateVector& psi, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// rho_mn -> rho_mn exp(i tau (E_m - E_n)): strip free evolution under a
/// diagonal Hamiltonian with the given energies.
DensityMatrix to_interaction_picture(const DensityMatrix& rho, const Eigen::VectorXd& energies,
                                     double tau);

/// Reduced state of clock 0 of N+1 equatorial qubit clocks in the
/// interaction picture:
///   rho = 1/2 [[1, c^N], [conj(c)^N, 1]],  c = (1 + exp(-i tau eps^2 / xi)) / 2.
/// N is a double so that macroscopic counts (1e23) are accepted; powers are
/// taken in log-polar form. The coherence phase is reliable while
/// N * tau * eps^2 / xi stays well below 1e15.
DensityMatrix reduced_qubit_closed_form(double n_others, double tau, double eps, double xi);

/// Reduced state of clock B when A and B start in equatorial coherent states:
///   rho_B = sum_k C(2jA,k)/4^jA |pi/2, phi_k, jB><...|,
///   phi_k = -tau epsB (1 - gravity k epsA / xi).
DensityMatrix reduced_b_coherent_closed_form(SpinSpace a, SpinSpace b, double epsA, double epsB,
                                             double xi, double tau, double gravity = 1.0);

/// Reduced state of a qubit clock A next to a spin-jB coherent clock B.
DensityMatrix reduced_a_qubit_mixture(SpinSpace b, double epsA, double epsB, double xi,
                                      double tau, double gravity = 1.0);

/// Mean-field evolution: each clock b evolves under factor_b * H_b with the
/// factors of semiclassical_dilation_factors. Throws std::invalid_argument
/// if psi0 is not a product state.
StateVector evolve_semiclassical(const ClockNetwork& net, const StateVector& psi0, double tau);

/// Purity of the reduced state of clock `keep` along the grid. Grid points
/// are independent and spread over `jobs` threads.
Trajectory<double> purity_revival_scan(const StateVector& psi0, const DiagonalHamiltonian& H,
                                       std::span<const double> tau_grid, std::size_t keep = 0,
                                       std::size_t jobs = 1);

}  // namespace gravclocks
