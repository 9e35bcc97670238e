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

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "gravclocks/evolution.hpp"
#include "gravclocks/metrics.hpp"
#include "oracles.hpp"

namespace gravclocks {
namespace {

constexpr double kPi = std::numbers::pi;

StateVector plus_product(std::size_t n) {
  return kron(std::vector<StateVector>(n, coherent_state(SpinSpace(1), kPi / 2, 0.0)));
}

StateVector random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  StateVector v(static_cast<Eigen::Index>(dim));
  for (auto& x : v) x = Complex(g(rng), g(rng));
  return v.normalized();
}

TEST(EvolveExact, ZeroTimeIsIdentity) {
  std::mt19937_64 rng(1);
  const auto h = network_hamiltonian(ClockNetwork::qubits(3, 0.3, 1.5));
  const StateVector psi = random_state(8, rng);
  EXPECT_EQ((evolve_exact(psi, h, 0.0) - psi).cwiseAbs().maxCoeff(), 0.0);
}

TEST(EvolveExact, RejectsMismatchedDimension) {
  const auto h = network_hamiltonian(ClockNetwork::qubits(2, 0.3, 1.5));
  EXPECT_THROW(evolve_exact(StateVector::Zero(3), h, 1.0), std::invalid_argument);
}

TEST(EvolveExact, RefusesAboveBruteForceLimit) {
  const auto h = network_hamiltonian(ClockNetwork::qubits(21, 0.3, 1.5));
  EXPECT_THROW(evolve_exact(StateVector::Zero(2), h, 1.0), std::length_error);
}

// Two-clock state (|0>|phi0> + e^{-i tau eps}|1>|phi1>)/sqrt(2).
TEST(EvolveExact, TwoQubitEntangledForm) {
  const double eps = 0.4, xi = 2.0, tau = 3.3;
  const auto h = network_hamiltonian(ClockNetwork::qubits(2, eps, xi));
  const StateVector psi = evolve_exact(plus_product(2), h, tau);
  StateVector phi0(2), phi1(2);
  phi0 << 1.0, std::exp(Complex(0, -tau * eps));
  phi1 << 1.0, std::exp(Complex(0, -tau * eps * (1 - eps / xi)));
  phi0 /= std::sqrt(2.0);
  phi1 /= std::sqrt(2.0);
  StateVector e0(2), e1(2);
  e0 << 1.0, 0.0;
  e1 << 0.0, 1.0;
  const StateVector expected =
      (kron(e0, phi0) + std::exp(Complex(0, -tau * eps)) * kron(e1, phi1)) / std::sqrt(2.0);
  EXPECT_LT((psi - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(EvolveExact, NoGravityNoEntanglement) {
  const auto net = ClockNetwork::qubits(2, 0.4, 2.0, 0.0);
  const StateVector psi = evolve_exact(plus_product(2), network_hamiltonian(net), 17.0);
  const std::size_t dims[] = {2, 2}, keep[] = {0};
  EXPECT_NEAR(entanglement_entropy(partial_trace(psi, dims, keep)), 0.0, 1e-12);
}

TEST(EvolveExact, MatchesDensePropagatorOracle) {
  std::mt19937_64 rng(2);
  const std::vector<int> dims{2, 3, 2};
  const std::vector<double> eps{0.3, 0.2, 0.5};
  Eigen::MatrixXd xi(3, 3);
  xi << 0, 1.5, 2.0, 1.5, 0, 0.8, 2.0, 0.8, 0;
  const ClockNetwork net({{SpinSpace(1), 0.3}, {SpinSpace(2), 0.2}, {SpinSpace(1), 0.5}}, xi);
  const StateVector psi = random_state(12, rng);
  const oracle::Mat u = oracle::propagator(oracle::network_matrix(dims, eps, xi), 4.2);
  EXPECT_LT((evolve_exact(psi, network_hamiltonian(net), 4.2) - u * psi).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(EvolutionProperty, NormPreserved) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> t(-1e6, 1e6);
  const auto h = network_hamiltonian(ClockNetwork({{SpinSpace(3), 0.2}, {SpinSpace(2), 0.7}}, 1.3));
  for (int i = 0; i < 100; ++i) {
    const StateVector psi = random_state(12, rng);
    ASSERT_NEAR(evolve_exact(psi, h, t(rng)).norm(), 1.0, 1e-12);
  }
}

TEST(EvolutionProperty, Composition) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> t(0.0, 100.0);
  const auto h = network_hamiltonian(ClockNetwork::qubits(4, 0.37, 0.9));
  for (int i = 0; i < 50; ++i) {
    const StateVector psi = random_state(16, rng);
    const double t1 = t(rng), t2 = t(rng);
    const StateVector a = evolve_exact(evolve_exact(psi, h, t1), h, t2);
    const StateVector b = evolve_exact(psi, h, t1 + t2);
    ASSERT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(PhaseFactor, ReducesHugeArguments) {
  // 1e16 * (pi/2 rounded to double) is not representable mod 2pi in double; compare with
  // the extended-precision reduction.
  const double tau = 4e15, e = 0.25;
  const long double angle = -static_cast<long double>(tau) * e;
  const long double r = std::fmod(angle, 2.0L * std::numbers::pi_v<long double>);
  EXPECT_NEAR(std::abs(phase_factor(tau, e) - std::polar(1.0, static_cast<double>(r))), 0.0, 1e-12);
}

TEST(PartialTrace, ProductStateIsPure) {
  const StateVector psi = kron(coherent_state(SpinSpace(2), 0.3, 1.0), coherent_state(SpinSpace(1), 1.0, 2.0));
  const std::size_t dims[] = {3, 2}, keep[] = {1};
  EXPECT_NEAR(purity(partial_trace(psi, dims, keep)), 1.0, 1e-14);
}

TEST(PartialTrace, MaximallyMixedAtMixingTime) {
  const double eps = 0.2, xi = 3.0;
  const auto h = network_hamiltonian(ClockNetwork::qubits(2, eps, xi));
  const StateVector psi = evolve_exact(plus_product(2), h, tau_mix(eps, xi));
  const std::size_t dims[] = {2, 2}, keep[] = {0};
  const DensityMatrix rho = partial_trace(psi, dims, keep);
  EXPECT_NEAR(purity(rho), 0.5, 1e-10);
  EXPECT_NEAR(entanglement_entropy(rho), 1.0, 1e-9);
}

TEST(PartialTrace, RandomThreeQubitIsValid) {
  std::mt19937_64 rng(6);
  const std::size_t dims[] = {2, 2, 2};
  for (int i = 0; i < 20; ++i) {
    const StateVector psi = random_state(8, rng);
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t keep[] = {k};
      const DensityMatrix rho = partial_trace(psi, dims, keep);
      ASSERT_NEAR(std::abs(rho.trace() - 1.0), 0.0, 1e-12);
      ASSERT_GE(Eigen::SelfAdjointEigenSolver<DensityMatrix>(rho).eigenvalues().minCoeff(), -1e-12);
    }
  }
}

TEST(PartialTrace, MatchesNaiveOracleForMixedDims) {
  std::mt19937_64 rng(7);
  const std::vector<int> d{3, 2, 4};
  const std::size_t dims[] = {3, 2, 4};
  const StateVector psi = random_state(24, rng);
  const DensityMatrix full = projector(psi);
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t keep[] = {k};
    const oracle::Mat ref = oracle::trace_out_all_but(full, d, k);
    EXPECT_LT(oracle::max_abs(partial_trace(psi, dims, keep) - ref), 1e-14);
    EXPECT_LT(oracle::max_abs(partial_trace(full, dims, keep) - ref), 1e-14);
  }
}

TEST(PartialTrace, KeepOrderIsAscending) {
  std::mt19937_64 rng(8);
  const std::size_t dims[] = {2, 3, 2};
  const StateVector psi = random_state(12, rng);
  const std::size_t a[] = {0, 2}, b[] = {2, 0};
  EXPECT_EQ(oracle::max_abs(partial_trace(psi, dims, a) - partial_trace(psi, dims, b)), 0.0);
}

TEST(PartialTrace, BadIndexThrows) {
  const std::size_t dims[] = {2, 2}, keep[] = {2};
  EXPECT_THROW(partial_trace(plus_product(2), dims, keep), std::out_of_range);
}

TEST(ReducedQubit, InitialAndFullyDephased) {
  const DensityMatrix r0 = reduced_qubit_closed_form(5, 0.0, 0.3, 2.0);
  EXPECT_LT(oracle::max_abs(r0 - projector(plus_product(1))), 1e-15);
  for (double n : {1.0, 2.0, 7.0}) {
    const DensityMatrix r = reduced_qubit_closed_form(n, kPi * 2.0 / 0.09, 0.3, 2.0);
    EXPECT_LT(std::abs(r(0, 1)), 1e-15);
  }
}

// Closed-form reduced qubit against a Kronecker-built Hamiltonian and an explicit partial trace,
// moved to the interaction picture of the free clock-0 ladder.
TEST(ReducedQubit, MatchesKroneckerOracle) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ue(0.1, 1.0), ux(1.0, 10.0), ut(0.0, 2 * kPi);
  for (int n = 1; n <= 5; ++n) {
    const std::vector<int> dims(n + 1, 2);
    for (int draw = 0; draw < 10; ++draw) {
      const double eps = ue(rng), xi = ux(rng), tau = ut(rng) * xi / (eps * eps);
      Eigen::MatrixXd x = Eigen::MatrixXd::Constant(n + 1, n + 1, xi);
      const oracle::Mat h = oracle::network_matrix(dims, std::vector<double>(n + 1, eps), x);
      oracle::Vec psi = oracle::Vec::Ones(1);
      for (int a = 0; a <= n; ++a) psi = oracle::kron(psi, oracle::Vec(oracle::Vec::Constant(2, 1 / std::sqrt(2.0))));
      const oracle::Vec out = oracle::propagator(h, tau) * psi;
      oracle::Mat rho = oracle::trace_out_all_but(out * out.adjoint(), dims, 0);
      rho(0, 1) *= std::exp(Complex(0, -tau * eps));
      rho(1, 0) *= std::exp(Complex(0, tau * eps));
      ASSERT_LT(oracle::max_abs(reduced_qubit_closed_form(n, tau, eps, xi) - rho), 1e-10) << "N=" << n;
    }
  }
}

TEST(ReducedQubit, LibraryBruteForceUpToEightOthers) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> ue(0.1, 1.0), ux(1.0, 10.0), ut(0.0, 2 * kPi);
  for (int n = 1; n <= 8; ++n) {
    const auto net = ClockNetwork::qubits(n + 1, 1.0, 1.0);
    for (int draw = 0; draw < 5; ++draw) {
      const double eps = ue(rng), xi = ux(rng), tau = ut(rng) * xi / (eps * eps);
      const auto h = network_hamiltonian(ClockNetwork::qubits(n + 1, eps, xi));
      const StateVector psi = evolve_exact(plus_product(n + 1), h, tau);
      const std::vector<std::size_t> dims(n + 1, 2);
      const std::size_t keep[] = {0};
      const DensityMatrix schr = partial_trace(psi, dims, keep);
      const DensityMatrix inter = to_interaction_picture(schr, z_energy_ladder(SpinSpace(1), eps), tau);
      const DensityMatrix closed = reduced_qubit_closed_form(n, tau, eps, xi);
      ASSERT_LT(oracle::max_abs(inter - closed), 1e-10);
      // Free phases drop out of the coherence magnitude.
      ASSERT_NEAR(std::abs(schr(0, 1)), std::abs(closed(0, 1)), 1e-12);
    }
  }
}

TEST(ReducedQubit, MacroscopicCountStaysFinite) {
  const DensityMatrix r = reduced_qubit_closed_form(1e23, 1e-12, 1.0, 1.0);
  EXPECT_TRUE(r.allFinite());
  EXPECT_NEAR(std::abs(r(0, 1)), 0.5 * std::exp(-1e23 * 1e-24 / 8), 1e-12);
}

TEST(ReducedB, InitialIsCoherent) {
  const DensityMatrix r = reduced_b_coherent_closed_form(SpinSpace(4), SpinSpace(3), 0.1, 0.2, 1.0, 0.0);
  EXPECT_LT(oracle::max_abs(r - projector(coherent_state(SpinSpace(3), kPi / 2, 0.0))), 1e-14);
}

TEST(ReducedB, NoGravityIsPrecessingCoherentState) {
  const double tau = 13.0, epsB = 0.3;
  const DensityMatrix r = reduced_b_coherent_closed_form(SpinSpace(4), SpinSpace(3), 0.1, epsB, 1.0, tau, 0.0);
  EXPECT_LT(oracle::max_abs(r - projector(coherent_state(SpinSpace(3), kPi / 2, -tau * epsB))), 1e-13);
}

TEST(ReducedB, MatchesKroneckerOracleForSmallSpins) {
  const std::vector<int> twos{1, 2, 3, 4, 6};
  const double epsA = 0.31, epsB = 0.47, xi = 1.7;
  for (int ta : twos)
    for (int tb : twos) {
      const std::vector<int> dims{ta + 1, tb + 1};
      Eigen::MatrixXd x(2, 2);
      x << 0, xi, xi, 0;
      const oracle::Mat h = oracle::network_matrix(dims, {epsA, epsB}, x);
      const oracle::Vec psi = oracle::kron(oracle::coherent_by_tensor_power(ta, kPi / 2, 0.0),
                                           oracle::coherent_by_tensor_power(tb, kPi / 2, 0.0));
      for (double tau : {0.7, 5.3, 41.0}) {
        const oracle::Vec out = oracle::propagator(h, tau) * psi;
        const oracle::Mat rho_b = oracle::trace_out_all_but(out * out.adjoint(), dims, 1);
        const oracle::Mat rho_a = oracle::trace_out_all_but(out * out.adjoint(), dims, 0);
        ASSERT_LT(oracle::max_abs(reduced_b_coherent_closed_form(SpinSpace(ta), SpinSpace(tb), epsA, epsB, xi, tau) -
                                  rho_b),
                  1e-10);
        if (ta == 1)
          ASSERT_LT(oracle::max_abs(reduced_a_qubit_mixture(SpinSpace(tb), epsA, epsB, xi, tau) - rho_a), 1e-10);
      }
    }
}

TEST(ReducedA, InitialPlusAndNoGravity) {
  EXPECT_LT(oracle::max_abs(reduced_a_qubit_mixture(SpinSpace(5), 0.2, 0.3, 1.0, 0.0) - projector(plus_product(1))),
            1e-15);
  const DensityMatrix r = reduced_a_qubit_mixture(SpinSpace(5), 0.2, 0.3, 1.0, 9.0, 0.0);
  EXPECT_NEAR(purity(r), 1.0, 1e-13);
  EXPECT_NEAR(std::arg(r(1, 0)), std::remainder(-9.0 * 0.2, 2 * kPi), 1e-13);
}

TEST(ReducedA, SpinHalfPartnerIsTwoQubitTrace) {
  const double epsA = 0.2, epsB = 0.35, xi = 1.3, tau = 21.0;
  const ClockNetwork net({{SpinSpace(1), epsA}, {SpinSpace(1), epsB}}, xi);
  const StateVector psi = evolve_exact(plus_product(2), network_hamiltonian(net), tau);
  const std::size_t dims[] = {2, 2}, keep[] = {0};
  EXPECT_LT(oracle::max_abs(reduced_a_qubit_mixture(SpinSpace(1), epsA, epsB, xi, tau) - partial_trace(psi, dims, keep)),
            1e-13);
}

TEST(Semiclassical, OutputIsProduct) {
  const ClockNetwork net({{SpinSpace(3), 0.2}, {SpinSpace(1), 0.3}}, 2.0);
  const StateVector psi0 = kron(coherent_state(SpinSpace(3), kPi / 2, 0.0), plus_product(1));
  for (double tau : {1.0, 50.0, 900.0}) {
    const StateVector psi = evolve_semiclassical(net, psi0, tau);
    const std::size_t dims[] = {4, 2}, keep[] = {1};
    EXPECT_NEAR(entanglement_entropy(partial_trace(psi, dims, keep)), 0.0, 1e-10);
  }
}

TEST(Semiclassical, NoGravityMatchesExact) {
  const ClockNetwork net({{SpinSpace(3), 0.2}, {SpinSpace(1), 0.3}}, 2.0, 0.0);
  const StateVector psi0 = kron(coherent_state(SpinSpace(3), 1.0, 0.4), plus_product(1));
  EXPECT_LT((evolve_semiclassical(net, psi0, 77.0) - evolve_exact(psi0, network_hamiltonian(net), 77.0))
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
}

TEST(Semiclassical, FidelityWithExactDecays) {
  const double eps = 0.3, xi = 1.0;
  const auto net = ClockNetwork::qubits(2, eps, xi);
  const auto h = network_hamiltonian(net);
  double prev = 1.0 + 1e-12;
  for (double frac : {0.0, 0.1, 0.2, 0.3, 0.4}) {
    const double tau = frac * tau_mix(eps, xi);
    const double f = std::norm(overlap(evolve_semiclassical(net, plus_product(2), tau), evolve_exact(plus_product(2), h, tau)));
    EXPECT_LT(f, prev);
    prev = f;
  }
  EXPECT_LT(prev, 0.95);
}

TEST(PurityScan, MinimumAtMixingTimeAndRevival) {
  const double eps = 0.05, xi = 2.0;
  const auto h = network_hamiltonian(ClockNetwork::qubits(2, eps, xi));
  const double tm = tau_mix(eps, xi);
  std::vector<double> grid;
  for (int i = 0; i <= 400; ++i) grid.push_back(2 * tm * i / 400.0);
  const auto scan = purity_revival_scan(plus_product(2), h, grid);
  EXPECT_NEAR(scan.states.front(), 1.0, 1e-15);
  std::size_t imin = 0;
  for (std::size_t i = 0; i < scan.size(); ++i)
    if (scan.states[i] < scan.states[imin]) imin = i;
  EXPECT_NEAR(scan.times[imin], tm, grid[1] - grid[0]);
  EXPECT_NEAR(scan.states.back(), 1.0, 1e-9);
  const auto par = purity_revival_scan(plus_product(2), h, grid, 0, 3);
  EXPECT_EQ(par.states, scan.states);
}

TEST(Trajectory, RejectsNonIncreasingTimes) {
  Trajectory<double> t;
  t.push(0.0, 1.0);
  EXPECT_THROW(t.push(0.0, 1.0), std::invalid_argument);
}

}  // namespace
}  // namespace gravclocks
