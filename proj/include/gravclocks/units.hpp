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

// Physical constants and the Planck-unit bridge between SI inputs and the
// dimensionless variables used by every physics routine in this library:
//
//   tau     = t  / t_P     (time)
//   epsilon = dE / E_P     (energy gap)
//   xi      = x  / l_P     (distance)
//
// In these variables G dE / (c^4 x) = epsilon / xi and t dE / hbar =
// tau * epsilon, so all Hamiltonians below are written with hbar = 1 and a
// gravitational coupling of -1/xi.

namespace gravclocks {

/// CODATA 2018 defaults.
inline constexpr double kCodataG = 6.67430e-11;        // m^3 kg^-1 s^-2
inline constexpr double kCodataC = 299792458.0;        // m / s
inline constexpr double kCodataHbar = 1.054571817e-34; // J s
inline constexpr double kElectronVolt = 1.602176634e-19; // J (exact)

class PhysicalScales {
 public:
  /// Throws std::domain_error unless all three constants are finite and > 0.
  PhysicalScales(double G, double c, double hbar);

  static PhysicalScales codata2018() { return {kCodataG, kCodataC, kCodataHbar}; }

  double G() const { return G_; }
  double c() const { return c_; }
  double hbar() const { return hbar_; }
  double planck_length() const { return l_P_; }
  double planck_time() const { return t_P_; }
  double planck_energy() const { return E_P_; }

 private:
  double G_, c_, hbar_;
  double l_P_, t_P_, E_P_;
};

struct DimensionlessParams {
  double tau = 0.0;
  double epsilon = 0.0;
  double xi = 1.0;
};

struct SIQuantities {
  double seconds = 0.0;
  double joules = 0.0;
  double meters = 0.0;
};

/// Throws std::domain_error for x <= 0, t < 0 or dE < 0.
DimensionlessParams to_dimensionless(double t_seconds, double dE_joules, double x_meters,
                                     const PhysicalScales& scales);

SIQuantities from_dimensionless(const DimensionlessParams& p, const PhysicalScales& scales);

inline double to_tau(double t_seconds, const PhysicalScales& s) { return t_seconds / s.planck_time(); }
inline double to_epsilon(double dE_joules, const PhysicalScales& s) { return dE_joules / s.planck_energy(); }
inline double to_xi(double x_meters, const PhysicalScales& s) { return x_meters / s.planck_length(); }
inline double to_seconds(double tau, const PhysicalScales& s) { return tau * s.planck_time(); }
inline double to_joules(double epsilon, const PhysicalScales& s) { return epsilon * s.planck_energy(); }
inline double to_meters(double xi, const PhysicalScales& s) { return xi * s.planck_length(); }

}  // namespace gravclocks
