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

#include "gravclocks/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gravclocks/evolution.hpp"

namespace gravclocks {

ClockNetwork::ClockNetwork(std::vector<ClockSpec> clocks, double xi, double gravity)
    : clocks_(std::move(clocks)), gravity_(gravity), common_(true) {
  if (!(xi > 0.0) || !std::isfinite(xi))
    throw std::domain_error("ClockNetwork: distance must be positive and finite");
  const auto n = static_cast<Eigen::Index>(clocks_.size());
  distances_ = Eigen::MatrixXd::Constant(n, n, xi);
  distances_.diagonal().setZero();
  validate();
}

ClockNetwork::ClockNetwork(std::vector<ClockSpec> clocks, Eigen::MatrixXd distances, double gravity)
    : clocks_(std::move(clocks)), distances_(std::move(distances)), gravity_(gravity), common_(false) {
  const auto n = static_cast<Eigen::Index>(clocks_.size());
  if (distances_.rows() != n || distances_.cols() != n)
    throw std::invalid_argument("ClockNetwork: distance matrix must be n x n");
  for (Eigen::Index a = 0; a < n; ++a) {
    distances_(a, a) = 0.0;
    for (Eigen::Index b = a + 1; b < n; ++b) {
      if (!(distances_(a, b) > 0.0) || !std::isfinite(distances_(a, b)))
        throw std::domain_error("ClockNetwork: pairwise distances must be positive");
      if (distances_(a, b) != distances_(b, a))
        throw std::invalid_argument("ClockNetwork: distance matrix must be symmetric");
    }
  }
  validate();
}

ClockNetwork ClockNetwork::qubits(std::size_t n, double epsilon, double xi, double gravity) {
  return ClockNetwork(std::vector<ClockSpec>(n, ClockSpec{SpinSpace(1), epsilon}), xi, gravity);
}

void ClockNetwork::validate() const {
  if (!std::isfinite(gravity_)) throw std::domain_error("ClockNetwork: gravity must be finite");
  for (const auto& c : clocks_)
    if (!(c.epsilon >= 0.0) || !std::isfinite(c.epsilon))
      throw std::domain_error("ClockSpec: energy gap must be non-negative");
}

ClockNetwork ClockNetwork::with_gravity(double g) const {
  ClockNetwork copy = *this;
  copy.gravity_ = g;
  copy.validate();
  return copy;
}

std::vector<std::size_t> ClockNetwork::local_dims() const {
  std::vector<std::size_t> dims;
  dims.reserve(clocks_.size());
  for (const auto& c : clocks_) dims.push_back(c.space.dim());
  return dims;
}

std::uint64_t ClockNetwork::total_dim() const {
  constexpr std::uint64_t kMax = std::uint64_t{1} << 62;
  std::uint64_t d = 1;
  for (const auto& c : clocks_) {
    if (d > kMax / c.space.dim()) throw std::overflow_error("ClockNetwork: product dimension too large");
    d *= c.space.dim();
  }
  return d;
}

DiagonalHamiltonian::DiagonalHamiltonian(const ClockNetwork& net)
    : dims_(net.local_dims()), dim_(net.total_dim()) {
  if (net.size() == 0) throw std::invalid_argument("network_hamiltonian: empty network");
  const auto n = static_cast<Eigen::Index>(net.size());
  eps_.reserve(net.size());
  for (const auto& c : net.clocks()) eps_.push_back(c.epsilon);
  lambda_ = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      if (a != b) lambda_(a, b) = -net.gravity() / net.distance(a, b);

  if (dim_ <= kMaterializeLimit) {
    table_.resize(dim_);
    for (std::uint64_t label = 0; label < dim_; ++label) table_[label] = energy_from_digits(label);
  }
}

std::vector<std::size_t> DiagonalHamiltonian::decode(std::uint64_t label) const {
  if (label >= dim_) throw std::out_of_range("DiagonalHamiltonian: label out of range");
  std::vector<std::size_t> k(dims_.size());
  for (std::size_t a = dims_.size(); a-- > 0;) {
    k[a] = label % dims_[a];
    label /= dims_[a];
  }
  return k;
}

std::uint64_t DiagonalHamiltonian::encode(const std::vector<std::size_t>& k) const {
  if (k.size() != dims_.size()) throw std::invalid_argument("DiagonalHamiltonian: wrong label arity");
  std::uint64_t label = 0;
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    if (k[a] >= dims_[a]) throw std::out_of_range("DiagonalHamiltonian: digit out of range");
    label = label * dims_[a] + k[a];
  }
  return label;
}

double DiagonalHamiltonian::energy_from_digits(std::uint64_t label) const {
  const auto k = decode(label);
  const std::size_t n = k.size();
  std::vector<double> local(n);
  double e = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    local[a] = static_cast<double>(k[a]) * eps_[a];
    e += local[a];
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (local[a] == 0.0) continue;
    for (std::size_t b = a + 1; b < n; ++b)
      e += lambda_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) * local[a] * local[b];
  }
  return e;
}

double DiagonalHamiltonian::energy(std::uint64_t label) const {
  if (label >= dim_) throw std::out_of_range("DiagonalHamiltonian: label out of range");
  return materialized() ? table_[label] : energy_from_digits(label);
}

const std::vector<double>& DiagonalHamiltonian::energies() const {
  if (!materialized())
    throw std::length_error("DiagonalHamiltonian: dimension " + std::to_string(dim_) +
                            " is above the materialization limit");
  return table_;
}

DiagonalHamiltonian internal_hamiltonian(const ClockSpec& clock) {
  return DiagonalHamiltonian(ClockNetwork({clock}, 1.0));
}

DiagonalHamiltonian network_hamiltonian(const ClockNetwork& net) {
  if (net.size() == 0) throw std::invalid_argument("network_hamiltonian: empty network");
  return DiagonalHamiltonian(net);
}

ProductFactors factorize_product_state(const ClockNetwork& net, const StateVector& psi, double tol) {
  const auto dims = net.local_dims();
  if (static_cast<std::uint64_t>(psi.size()) != net.total_dim())
    throw std::invalid_argument("factorize_product_state: state dimension does not match network");
  ProductFactors out;
  out.factors.reserve(dims.size());
  for (std::size_t a = 0; a < dims.size(); ++a) {
    const std::size_t keep[] = {a};
    const DensityMatrix rho = partial_trace(psi, dims, keep);
    if (purity(rho) < 1.0 - tol)
      throw std::invalid_argument("state is entangled across clock " + std::to_string(a) +
                                  "; a product state is required");
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    out.factors.push_back(es.eigenvectors().col(es.eigenvectors().cols() - 1));
  }
  const StateVector rebuilt = kron(out.factors);
  const Complex ov = rebuilt.dot(psi);
  out.phase = ov / std::abs(ov);
  return out;
}

Eigen::VectorXd semiclassical_dilation_factors(const ClockNetwork& net, const StateVector& psi) {
  const ProductFactors pf = factorize_product_state(net, psi);
  const std::size_t n = net.size();
  std::vector<double> mean_energy(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Eigen::VectorXd ladder = z_energy_ladder(net.clock(a).space, net.clock(a).epsilon);
    mean_energy[a] = (pf.factors[a].cwiseAbs2().array() * ladder.array()).sum();
  }
  Eigen::VectorXd factors = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      if (a != b) factors[b] -= net.gravity() * mean_energy[a] / net.distance(a, b);
  return factors;
}

}  // namespace gravclocks
