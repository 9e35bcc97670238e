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

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "gravclocks/spin_algebra.hpp"

namespace gravclocks {

/// One clock: a spin-j ladder with gap epsilon (Planck units).
struct ClockSpec {
  SpinSpace space{1};
  double epsilon = 0.0;
};

/// Clocks plus pairwise coordinate distances (Planck lengths).
///
/// `gravity` multiplies every pairwise coupling; 1 is physical, 0 switches
/// the interaction off while leaving the free ladders untouched.
class ClockNetwork {
 public:
  /// Common distance xi between every pair.
  ClockNetwork(std::vector<ClockSpec> clocks, double xi, double gravity = 1.0);
  /// Full symmetric distance matrix; diagonal entries are ignored.
  ClockNetwork(std::vector<ClockSpec> clocks, Eigen::MatrixXd distances, double gravity = 1.0);

  /// n identical qubit clocks at common distance xi.
  static ClockNetwork qubits(std::size_t n, double epsilon, double xi, double gravity = 1.0);

  std::size_t size() const { return clocks_.size(); }
  const ClockSpec& clock(std::size_t a) const { return clocks_.at(a); }
  const std::vector<ClockSpec>& clocks() const { return clocks_; }
  double distance(std::size_t a, std::size_t b) const { return distances_(a, b); }
  const Eigen::MatrixXd& distances() const { return distances_; }
  bool common_distance() const { return common_; }
  double gravity() const { return gravity_; }
  ClockNetwork with_gravity(double g) const;

  std::vector<std::size_t> local_dims() const;
  /// Product of local dimensions; throws std::overflow_error beyond 2^62.
  std::uint64_t total_dim() const;

 private:
  void validate() const;

  std::vector<ClockSpec> clocks_;
  Eigen::MatrixXd distances_;
  double gravity_;
  bool common_;
};

/// Joint Hamiltonian, diagonal in the product excitation basis:
///
///   E(k) = sum_a k_a eps_a + sum_{a<b} lambda_ab (k_a eps_a)(k_b eps_b),
///   lambda_ab = -gravity / xi_ab.
///
/// Labels are mixed-radix with clock 0 most significant (A (x) B ordering).
/// Energies are tabulated when the dimension is at most kMaterializeLimit and
/// computed from the label digits on demand above it.
class DiagonalHamiltonian {
 public:
  static constexpr std::uint64_t kMaterializeLimit = std::uint64_t{1} << 20;

  explicit DiagonalHamiltonian(const ClockNetwork& net);

  std::uint64_t dim() const { return dim_; }
  std::size_t num_clocks() const { return dims_.size(); }
  const std::vector<std::size_t>& local_dims() const { return dims_; }
  bool materialized() const { return !table_.empty(); }
  double coupling(std::size_t a, std::size_t b) const { return lambda_(a, b); }
  double gap(std::size_t a) const { return eps_[a]; }

  double energy(std::uint64_t label) const;
  /// Energy table; throws std::length_error when not materialized.
  const std::vector<double>& energies() const;

  std::vector<std::size_t> decode(std::uint64_t label) const;
  std::uint64_t encode(const std::vector<std::size_t>& k) const;

 private:
  double energy_from_digits(std::uint64_t label) const;

  std::vector<std::size_t> dims_;
  std::vector<double> eps_;
  Eigen::MatrixXd lambda_;
  std::uint64_t dim_;
  std::vector<double> table_;
};

DiagonalHamiltonian internal_hamiltonian(const ClockSpec& clock);
/// Throws std::invalid_argument for an empty network.
DiagonalHamiltonian network_hamiltonian(const ClockNetwork& net);

/// Per-clock factors of a product state together with the global phase such
/// that psi = phase * (factors[0] (x) factors[1] (x) ...). Throws
/// std::invalid_argument if any single-clock reduced state has purity below
/// 1 - tol.
struct ProductFactors {
  std::vector<StateVector> factors;
  Complex phase{1.0, 0.0};
};
ProductFactors factorize_product_state(const ClockNetwork& net, const StateVector& psi,
                                       double tol = 1e-10);

/// Mean-field rate factor of each clock: 1 + sum_{a != b} lambda_ab <H_a>,
/// i.e. 1 - sum_{a != b} <H_a> / xi_ab. Input must be a product state.
Eigen::VectorXd semiclassical_dilation_factors(const ClockNetwork& net, const StateVector& psi);

}  // namespace gravclocks
