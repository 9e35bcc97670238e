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

#include "gravclocks/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gravclocks/parallel.hpp"

namespace gravclocks {

namespace {

constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;

Complex polar_reduced(long double angle) {
  const long double r = std::fmod(angle, kTwoPiL);
  const double a = static_cast<double>(r);
  return {std::cos(a), std::sin(a)};
}

// Split every product label into (kept index, traced index).
struct SubsystemSplit {
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
  std::vector<std::size_t> kept_of;
  std::vector<std::size_t> traced_of;
};

SubsystemSplit split_labels(std::span<const std::size_t> dims, std::span<const std::size_t> keep) {
  const std::size_t n = dims.size();
  std::vector<bool> kept(n, false);
  for (std::size_t k : keep) {
    if (k >= n)
      throw std::out_of_range("partial_trace: subsystem index " + std::to_string(k) +
                              " out of range for " + std::to_string(n) + " clocks");
    kept[k] = true;
  }
  SubsystemSplit s;
  std::size_t total = 1;
  for (std::size_t a = 0; a < n; ++a) {
    total *= dims[a];
    (kept[a] ? s.kept_dim : s.traced_dim) *= dims[a];
  }
  s.kept_of.resize(total);
  s.traced_of.resize(total);
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t label = 0; label < total; ++label) {
    std::size_t ki = 0, ti = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (kept[a])
        ki = ki * dims[a] + digit[a];
      else
        ti = ti * dims[a] + digit[a];
    }
    s.kept_of[label] = ki;
    s.traced_of[label] = ti;
    for (std::size_t a = n; a-- > 0;) {
      if (++digit[a] < dims[a]) break;
      digit[a] = 0;
    }
  }
  return s;
}

std::size_t product(std::span<const std::size_t> dims) {
  std::size_t d = 1;
  for (auto x : dims) d *= x;
  return d;
}

}  // namespace

Complex phase_factor(double tau, double energy) {
  return polar_reduced(-static_cast<long double>(tau) * static_cast<long double>(energy));
}

StateVector evolve_exact(const StateVector& psi0, const DiagonalHamiltonian& H, double tau) {
  if (H.dim() > kBruteForceDimLimit)
    throw std::length_error("evolve_exact: product dimension exceeds the brute-force limit");
  if (static_cast<std::uint64_t>(psi0.size()) != H.dim())
    throw std::invalid_argument("evolve_exact: state dimension does not match Hamiltonian");
  const auto& e = H.energies();
  StateVector out(psi0.size());
  for (Eigen::Index i = 0; i < psi0.size(); ++i) out[i] = psi0[i] * phase_factor(tau, e[i]);
  return out;
}

DensityMatrix partial_trace(const StateVector& psi, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  if (static_cast<std::size_t>(psi.size()) != product(dims))
    throw std::invalid_argument("partial_trace: state dimension does not match subsystem dims");
  const SubsystemSplit s = split_labels(dims, keep);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(s.kept_dim),
                                              static_cast<Eigen::Index>(s.traced_dim));
  for (std::size_t label = 0; label < s.kept_of.size(); ++label)
    m(static_cast<Eigen::Index>(s.kept_of[label]), static_cast<Eigen::Index>(s.traced_of[label])) =
        psi[static_cast<Eigen::Index>(label)];
  return m * m.adjoint();
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  const std::size_t total = product(dims);
  if (rho.rows() != rho.cols() || static_cast<std::size_t>(rho.rows()) != total)
    throw std::invalid_argument("partial_trace: matrix dimension does not match subsystem dims");
  const SubsystemSplit s = split_labels(dims, keep);
  // label_of[i * traced + t] inverts the split.
  std::vector<std::size_t> label_of(total);
  for (std::size_t label = 0; label < total; ++label)
    label_of[s.kept_of[label] * s.traced_dim + s.traced_of[label]] = label;
  DensityMatrix out = DensityMatrix::Zero(static_cast<Eigen::Index>(s.kept_dim),
                                          static_cast<Eigen::Index>(s.kept_dim));
  for (std::size_t i = 0; i < s.kept_dim; ++i)
    for (std::size_t ip = 0; ip < s.kept_dim; ++ip) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < s.traced_dim; ++t)
        acc += rho(static_cast<Eigen::Index>(label_of[i * s.traced_dim + t]),
                   static_cast<Eigen::Index>(label_of[ip * s.traced_dim + t]));
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(ip)) = acc;
    }
  return out;
}

DensityMatrix to_interaction_picture(const DensityMatrix& rho, const Eigen::VectorXd& energies,
                                     double tau) {
  if (rho.rows() != energies.size() || rho.cols() != energies.size())
    throw std::invalid_argument("to_interaction_picture: dimension mismatch");
  DensityMatrix out = rho;
  for (Eigen::Index m = 0; m < rho.rows(); ++m)
    for (Eigen::Index n = 0; n < rho.cols(); ++n)
      out(m, n) *= phase_factor(-tau, energies[m] - energies[n]);
  return out;
}

DensityMatrix reduced_qubit_closed_form(double n_others, double tau, double eps, double xi) {
  if (!(n_others >= 1.0)) throw std::domain_error("reduced_qubit_closed_form: N must be >= 1");
  if (!(xi > 0.0)) throw std::domain_error("reduced_qubit_closed_form: xi must be positive");
  // c = cos(theta/2) exp(-i theta/2), theta = tau eps^2 / xi.
  const long double theta = static_cast<long double>(tau) * eps * eps / xi;
  const double half = static_cast<double>(std::fmod(0.5L * theta, kTwoPiL));
  const double cos_half = std::cos(half);
  Complex coherence = 0.0;
  if (cos_half != 0.0) {
    // log|cos| as log1p(-sin^2) / 2 keeps tiny angles from rounding to zero.
    const double sin_half = std::sin(half);
    const double magnitude = std::exp(0.5 * n_others * std::log1p(-sin_half * sin_half));
    long double angle = -static_cast<long double>(n_others) * half;
    if (cos_half < 0.0) angle += static_cast<long double>(n_others) * std::numbers::pi_v<long double>;
    coherence = magnitude * polar_reduced(angle);
  }
  DensityMatrix rho(2, 2);
  rho << 0.5, 0.5 * coherence, 0.5 * std::conj(coherence), 0.5;
  return rho;
}

DensityMatrix reduced_b_coherent_closed_form(SpinSpace a, SpinSpace b, double epsA, double epsB,
                                             double xi, double tau, double gravity) {
  if (!(xi > 0.0)) throw std::domain_error("reduced_b_coherent_closed_form: xi must be positive");
  const std::vector<double> w = binomial_weights(a.two_j());
  const auto d = static_cast<Eigen::Index>(b.dim());
  DensityMatrix rho = DensityMatrix::Zero(d, d);
  const long double free_phase = -static_cast<long double>(tau) * epsB;
  for (int k = 0; k <= a.two_j(); ++k) {
    if (w[k] == 0.0) continue;
    const long double phi = free_phase * (1.0L - static_cast<long double>(gravity) * k * epsA / xi);
    const StateVector c = coherent_state(b, std::numbers::pi / 2, static_cast<double>(std::fmod(phi, kTwoPiL)));
    rho.noalias() += w[k] * (c * c.adjoint());
  }
  return rho;
}

DensityMatrix reduced_a_qubit_mixture(SpinSpace b, double epsA, double epsB, double xi, double tau,
                                      double gravity) {
  return reduced_b_coherent_closed_form(b, SpinSpace(1), epsB, epsA, xi, tau, gravity);
}

StateVector evolve_semiclassical(const ClockNetwork& net, const StateVector& psi0, double tau) {
  const ProductFactors pf = factorize_product_state(net, psi0);
  const Eigen::VectorXd factors = semiclassical_dilation_factors(net, psi0);
  std::vector<StateVector> evolved;
  evolved.reserve(net.size());
  for (std::size_t b = 0; b < net.size(); ++b) {
    const Eigen::VectorXd ladder = z_energy_ladder(net.clock(b).space, net.clock(b).epsilon);
    StateVector v = pf.factors[b];
    for (Eigen::Index k = 0; k < v.size(); ++k)
      v[k] *= phase_factor(tau * factors[static_cast<Eigen::Index>(b)], ladder[k]);
    evolved.push_back(std::move(v));
  }
  return pf.phase * kron(evolved);
}

Trajectory<double> purity_revival_scan(const StateVector& psi0, const DiagonalHamiltonian& H,
                                       std::span<const double> tau_grid, std::size_t keep,
                                       std::size_t jobs) {
  const auto& dims = H.local_dims();
  std::vector<double> purities(tau_grid.size());
  const std::size_t keep_set[] = {keep};
  parallel_for(tau_grid.size(), jobs, [&](std::size_t i) {
    const StateVector psi = evolve_exact(psi0, H, tau_grid[i]);
    purities[i] = purity(partial_trace(psi, dims, keep_set));
  });
  Trajectory<double> traj;
  for (std::size_t i = 0; i < tau_grid.size(); ++i) traj.push(tau_grid[i], purities[i]);
  return traj;
}

}  // namespace gravclocks
