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

#include "gravclocks/spin_algebra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gravclocks {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Above this 2j the direct binomial product loses range; switch to logs.
constexpr int kDirectBinomialLimit = 60;

double direct_binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

SpinSpace::SpinSpace(int two_j) : two_j_(two_j) {
  if (two_j < 0) throw std::domain_error("SpinSpace: 2j must be non-negative");
}

SpinSpace SpinSpace::from_j(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (!(j >= 0.0) || std::abs(twice - rounded) > 1e-9)
    throw std::domain_error("SpinSpace: j must be a non-negative multiple of 1/2, got " +
                            std::to_string(j));
  return SpinSpace(static_cast<int>(rounded));
}

double wrap_angle(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

CoherentLabel::CoherentLabel(double theta, double phi, SpinSpace space)
    : theta_(theta), phi_(wrap_angle(phi)), space_(space) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw std::domain_error("CoherentLabel: theta must lie in [0, pi]");
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

std::vector<double> binomial_weights(int two_j) {
  std::vector<double> w(static_cast<std::size_t>(two_j) + 1);
  const double log_norm = two_j * std::log(2.0);
  for (int k = 0; k <= two_j; ++k) {
    w[k] = two_j <= kDirectBinomialLimit ? direct_binomial(two_j, k) * std::exp2(-two_j)
                                         : std::exp(log_binomial(two_j, k) - log_norm);
  }
  return w;
}

StateVector coherent_state(const CoherentLabel& label) {
  const int n = label.space().two_j();
  const double c = std::cos(0.5 * label.theta());
  const double s = std::sin(0.5 * label.theta());
  StateVector psi(n + 1);
  for (int k = 0; k <= n; ++k) {
    double mag;
    if (n <= kDirectBinomialLimit) {
      mag = std::sqrt(direct_binomial(n, k)) * std::pow(c, n - k) * std::pow(s, k);
    } else if ((c == 0.0 && k < n) || (s == 0.0 && k > 0)) {
      mag = 0.0;
    } else {
      double lg = 0.5 * log_binomial(n, k);
      if (n - k > 0) lg += (n - k) * std::log(std::abs(c));
      if (k > 0) lg += k * std::log(std::abs(s));
      mag = std::exp(lg);
    }
    psi[k] = std::polar(mag, wrap_angle(k * label.phi()));
  }
  return psi;
}

StateVector coherent_state(SpinSpace space, double theta, double phi) {
  return coherent_state(CoherentLabel(theta, phi, space));
}

Complex overlap(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("overlap: dimension mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  return a.dot(b);
}

double husimi_q(const DensityMatrix& rho, double theta, double phi) {
  if (rho.rows() != rho.cols() || rho.rows() < 1)
    throw std::invalid_argument("husimi_q: rho must be square");
  const StateVector c = coherent_state(SpinSpace(static_cast<int>(rho.rows()) - 1), theta, phi);
  return (c.adjoint() * rho * c)(0, 0).real();
}

Eigen::VectorXd z_energy_ladder(SpinSpace space, double dE) {
  if (!(dE >= 0.0)) throw std::domain_error("z_energy_ladder: dE must be non-negative");
  Eigen::VectorXd e(space.dim());
  for (Eigen::Index k = 0; k < e.size(); ++k) e[k] = static_cast<double>(k) * dE;
  return e;
}

DensityMatrix projector(const StateVector& psi) { return psi * psi.adjoint(); }

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.cwiseAbs2().sum();
}

StateVector kron(const StateVector& a, const StateVector& b) {
  StateVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

StateVector kron(const std::vector<StateVector>& factors) {
  if (factors.empty()) throw std::invalid_argument("kron: no factors");
  StateVector out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

double hermiticity_defect(const DensityMatrix& rho) {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

void validate_density_matrix(const DensityMatrix& rho, double tol) {
  if (rho.rows() != rho.cols() || rho.rows() == 0)
    throw std::invalid_argument("density matrix must be square and non-empty");
  if (hermiticity_defect(rho) > tol) throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > tol)
    throw std::invalid_argument("density matrix trace differs from 1");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol)
    throw std::invalid_argument("density matrix has a negative eigenvalue");
}

}  // namespace gravclocks
