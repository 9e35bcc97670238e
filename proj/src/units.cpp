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

#include "gravclocks/units.hpp"

#include <cmath>
#include <stdexcept>

namespace gravclocks {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

PhysicalScales::PhysicalScales(double G, double c, double hbar) : G_(G), c_(c), hbar_(hbar) {
  if (!positive_finite(G) || !positive_finite(c) || !positive_finite(hbar))
    throw std::domain_error("PhysicalScales: G, c and hbar must be finite and positive");
  l_P_ = std::sqrt(hbar * G / (c * c * c));
  t_P_ = l_P_ / c;
  E_P_ = hbar / t_P_;
}

DimensionlessParams to_dimensionless(double t_seconds, double dE_joules, double x_meters,
                                     const PhysicalScales& scales) {
  if (!(x_meters > 0.0)) throw std::domain_error("to_dimensionless: distance must be positive");
  if (!(t_seconds >= 0.0)) throw std::domain_error("to_dimensionless: time must be non-negative");
  if (!(dE_joules >= 0.0)) throw std::domain_error("to_dimensionless: energy gap must be non-negative");
  return {to_tau(t_seconds, scales), to_epsilon(dE_joules, scales), to_xi(x_meters, scales)};
}

SIQuantities from_dimensionless(const DimensionlessParams& p, const PhysicalScales& scales) {
  return {to_seconds(p.tau, scales), to_joules(p.epsilon, scales), to_meters(p.xi, scales)};
}

}  // namespace gravclocks
