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

#include "gravclocks/spin_algebra.hpp"
#include "gravclocks/units.hpp"

namespace gravclocks {

/// Coarse-grained azimuthal measurement: bin k collects the coherent-state
/// projectors with phi in [k R, (k+1) R), integrated over the whole sphere
/// with weight (2j+1)/(4 pi) sin(theta).
struct BinPOVM {
  SpinSpace space{1};
  double bin_width = 0.0;                  // R, radians
  std::vector<Eigen::MatrixXcd> elements;  // one Hermitian PSD element per bin

  std::size_t size() const { return elements.size(); }
  double bin_lower(std::size_t k) const { return static_cast<double>(k) * bin_width; }
  double bin_upper(std::size_t k) const { return static_cast<double>(k + 1) * bin_width; }
  double bin_center(std::size_t k) const { return (static_cast<double>(k) + 0.5) * bin_width; }
  /// Bin containing the (wrapped) angle phi.
  std::size_t bin_of(double phi) const;
};

/// 2pi/R is rounded to the nearest integer bin count and R recomputed.
/// Throws std::domain_error unless 0 < R <= 2pi.
BinPOVM build_povm(SpinSpace space, double bin_width);
/// Same, with the bin count given directly.
BinPOVM build_povm_bins(SpinSpace space, std::size_t bins);

/// p_k = Tr(M_k rho). Throws std::invalid_argument on dimension mismatch.
std::vector<double> bin_probabilities(const DensityMatrix& rho, const BinPOVM& povm);

struct MeasurementOutcome {
  double probability = 0.0;
  DensityMatrix post_state;
};
/// Lueders update sqrt(M_k) rho sqrt(M_k) / p_k.
MeasurementOutcome coarse_measurement_update(const DensityMatrix& rho, const BinPOVM& povm,
                                             std::size_t k);

/// Phase-weighted integral of coherent-state projectors over phi in [0, 2pi),
/// scaled by 1/eps so that entries are times in Planck units. The branch cut
/// sits at phi = 0; states straddling it are outside the faithful regime.
struct PointerOperator {
  SpinSpace space{1};
  double epsilon = 0.0;
  Eigen::MatrixXcd matrix;
};

/// Throws std::domain_error for eps <= 0.
PointerOperator pointer_operator(SpinSpace space, double eps);

struct PointerStatistics {
  double mean = 0.0;
  double stddev = 0.0;
};
PointerStatistics pointer_statistics(const DensityMatrix& rho, const PointerOperator& T);

/// pi / eps (Planck times) and pi hbar / dE (seconds).
double orthogonalisation_time(double eps);
double orthogonalisation_time_si(double dE, const PhysicalScales& scales);

/// Time for <T_A> of a qubit clock to change by its own spread: 1 / eps_A
/// (Planck times) or hbar / dE_A (seconds).
double dT_A(double eps_A);
double dT_A_si(double dE_A, const PhysicalScales& scales);

}  // namespace gravclocks
