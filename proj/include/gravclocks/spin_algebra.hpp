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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace gravclocks {

using Complex = std::complex<double>;
/// Dense pure state on a (product of) spin basis; norm 1.
using StateVector = Eigen::VectorXcd;
/// Dense Hermitian, unit-trace, positive semidefinite matrix.
using DensityMatrix = Eigen::MatrixXcd;

/// Spin-j Hilbert space. Basis label k = 0..2j counts excitations, so the
/// S_z eigenvalue m corresponds to k = j - m and the energy ladder ascends
/// with k.
class SpinSpace {
 public:
  explicit SpinSpace(int two_j = 1);
  /// Accepts integer or half-integer j >= 0; throws std::domain_error otherwise.
  static SpinSpace from_j(double j);

  int two_j() const { return two_j_; }
  double j() const { return 0.5 * two_j_; }
  std::size_t dim() const { return static_cast<std::size_t>(two_j_) + 1; }

  friend bool operator==(const SpinSpace&, const SpinSpace&) = default;

 private:
  int two_j_;
};

/// Point on the Bloch sphere; phi is reduced into [0, 2pi) on construction.
class CoherentLabel {
 public:
  CoherentLabel(double theta, double phi, SpinSpace space);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  const SpinSpace& space() const { return space_; }

 private:
  double theta_;
  double phi_;
  SpinSpace space_;
};

/// Reduce an angle into [0, 2pi).
double wrap_angle(double phi);

/// log C(n, k) via lgamma.
double log_binomial(int n, int k);

/// Binomial weights C(2j, k) / 4^j for k = 0..2j (energy distribution of the
/// equatorial coherent state).
std::vector<double> binomial_weights(int two_j);

/// |theta, phi, j> = (cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>)^{(x)2j},
/// symmetrised onto the excitation basis.
StateVector coherent_state(const CoherentLabel& label);
StateVector coherent_state(SpinSpace space, double theta, double phi);

/// <a|b>; throws std::invalid_argument on dimension mismatch.
Complex overlap(const StateVector& a, const StateVector& b);

/// <theta,phi| rho |theta,phi>.
double husimi_q(const DensityMatrix& rho, double theta, double phi);

/// E_k = k dE, k = 0..2j.
Eigen::VectorXd z_energy_ladder(SpinSpace space, double dE);

DensityMatrix projector(const StateVector& psi);
double purity(const DensityMatrix& rho);

/// Kronecker product of two state vectors (first factor most significant).
StateVector kron(const StateVector& a, const StateVector& b);
StateVector kron(const std::vector<StateVector>& factors);

/// Throws std::invalid_argument if rho is not square, not Hermitian within
/// tol, not unit trace within tol, or has an eigenvalue below -tol.
void validate_density_matrix(const DensityMatrix& rho, double tol = 1e-10);
/// Largest |rho_ij - conj(rho_ji)|.
double hermiticity_defect(const DensityMatrix& rho);

}  // namespace gravclocks
