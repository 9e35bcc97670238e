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

#include "gravclocks/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gravclocks {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

// (2j+1)/(4pi) sqrt(C(2j,p) C(2j,q)) int_0^pi sin(t) cos^a(t/2) sin^b(t/2) dt,
// a = 4j - p - q, b = p + q. The theta integral is 2 B(b/2 + 1, a/2 + 1).
Eigen::MatrixXd theta_moments(SpinSpace space) {
  const int n = space.two_j();
  const auto d = static_cast<Eigen::Index>(space.dim());
  std::vector<double> log_c(space.dim());
  for (int k = 0; k <= n; ++k) log_c[k] = log_binomial(n, k);
  const double log_front = std::log(n + 1.0) - std::log(4.0 * kPi) + std::log(2.0) - std::lgamma(n + 2.0);
  Eigen::MatrixXd m(d, d);
  for (int p = 0; p <= n; ++p)
    for (int q = p; q <= n; ++q) {
      const double b = p + q, a = 2.0 * n - b;
      const double v = std::exp(log_front + 0.5 * (log_c[p] + log_c[q]) + std::lgamma(0.5 * b + 1.0) +
                                std::lgamma(0.5 * a + 1.0));
      m(p, q) = v;
      m(q, p) = v;
    }
  return m;
}

// int_lo^hi exp(i d phi) dphi
Complex phase_bin_integral(int d, double lo, double hi) {
  if (d == 0) return hi - lo;
  const Complex num = std::polar(1.0, wrap_angle(d * hi)) - std::polar(1.0, wrap_angle(d * lo));
  return num / Complex(0.0, static_cast<double>(d));
}

}  // namespace

std::size_t BinPOVM::bin_of(double phi) const {
  const auto k = static_cast<std::size_t>(std::floor(wrap_angle(phi) / bin_width));
  return std::min(k, size() - 1);
}

BinPOVM build_povm_bins(SpinSpace space, std::size_t bins) {
  if (bins == 0) throw std::domain_error("build_povm: at least one bin is required");
  BinPOVM povm;
  povm.space = space;
  povm.bin_width = kTwoPi / static_cast<double>(bins);
  const Eigen::MatrixXd moments = theta_moments(space);
  const int n = space.two_j();
  povm.elements.reserve(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    const double lo = povm.bin_lower(k);
    const double hi = k + 1 == bins ? kTwoPi : povm.bin_upper(k);
    Eigen::MatrixXcd m(n + 1, n + 1);
    for (int p = 0; p <= n; ++p)
      for (int q = p; q <= n; ++q) {
        const Complex v = moments(p, q) * phase_bin_integral(p - q, lo, hi);
        m(p, q) = v;
        m(q, p) = std::conj(v);
      }
    povm.elements.push_back(std::move(m));
  }
  return povm;
}

BinPOVM build_povm(SpinSpace space, double bin_width) {
  if (!(bin_width > 0.0) || bin_width > kTwoPi * (1.0 + 1e-12))
    throw std::domain_error("build_povm: bin width must lie in (0, 2pi]");
  const auto bins = static_cast<std::size_t>(std::max(1.0, std::round(kTwoPi / bin_width)));
  return build_povm_bins(space, bins);
}

std::vector<double> bin_probabilities(const DensityMatrix& rho, const BinPOVM& povm) {
  const auto d = static_cast<Eigen::Index>(povm.space.dim());
  if (rho.rows() != d || rho.cols() != d)
    throw std::invalid_argument("bin_probabilities: state dimension " + std::to_string(rho.rows()) +
                                " does not match POVM dimension " + std::to_string(d));
  std::vector<double> p(povm.size());
  for (std::size_t k = 0; k < povm.size(); ++k) {
    // Tr(M rho) = sum_pq M_pq rho_qp
    const double v = povm.elements[k].cwiseProduct(rho.transpose()).sum().real();
    p[k] = std::max(0.0, v);
  }
  return p;
}

MeasurementOutcome coarse_measurement_update(const DensityMatrix& rho, const BinPOVM& povm,
                                             std::size_t k) {
  if (k >= povm.size()) throw std::out_of_range("coarse_measurement_update: bin index out of range");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(povm.elements[k]);
  const Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::MatrixXcd sqrt_m = es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
  DensityMatrix post = sqrt_m * rho * sqrt_m;
  const double p = post.trace().real();
  if (!(p > 0.0)) throw std::domain_error("coarse_measurement_update: outcome has zero probability");
  return {p, post / p};
}

PointerOperator pointer_operator(SpinSpace space, double eps) {
  if (!(eps > 0.0)) throw std::domain_error("pointer_operator: energy gap must be positive");
  const Eigen::MatrixXd moments = theta_moments(space);
  const int n = space.two_j();
  PointerOperator T{space, eps, Eigen::MatrixXcd(n + 1, n + 1)};
  for (int p = 0; p <= n; ++p)
    for (int q = p; q <= n; ++q) {
      // int_0^{2pi} phi exp(i d phi) dphi = 2pi^2 (d = 0), -2pi i / d otherwise.
      const int d = p - q;
      const Complex phi_moment = d == 0 ? Complex(2.0 * kPi * kPi) : Complex(0.0, -kTwoPi / d);
      const Complex v = moments(p, q) * phi_moment / eps;
      T.matrix(p, q) = v;
      T.matrix(q, p) = std::conj(v);
    }
  return T;
}

PointerStatistics pointer_statistics(const DensityMatrix& rho, const PointerOperator& T) {
  if (rho.rows() != T.matrix.rows() || rho.cols() != T.matrix.cols())
    throw std::invalid_argument("pointer_statistics: dimension mismatch");
  const Eigen::MatrixXcd t_rho = T.matrix * rho;
  const double mean = t_rho.trace().real();
  // Tr(T T rho) = sum_ij T_ij (T rho)_ji
  const double second = T.matrix.cwiseProduct(t_rho.transpose()).sum().real();
  return {mean, std::sqrt(std::max(0.0, second - mean * mean))};
}

double orthogonalisation_time(double eps) {
  if (!(eps > 0.0)) throw std::domain_error("orthogonalisation_time: energy gap must be positive");
  return kPi / eps;
}

double orthogonalisation_time_si(double dE, const PhysicalScales& s) {
  return to_seconds(orthogonalisation_time(to_epsilon(dE, s)), s);
}

double dT_A(double eps_A) {
  if (!(eps_A > 0.0)) throw std::domain_error("dT_A: energy gap must be positive");
  return 1.0 / eps_A;
}

double dT_A_si(double dE_A, const PhysicalScales& s) { return to_seconds(dT_A(to_epsilon(dE_A, s)), s); }

}  // namespace gravclocks
