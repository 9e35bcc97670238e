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


#include "gravclocks/cli/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "gravclocks/cli/csv.hpp"
#include "gravclocks/evolution.hpp"
#include "gravclocks/hamiltonians.hpp"
#include "gravclocks/master_eq.hpp"
#include "gravclocks/measurement.hpp"
#include "gravclocks/metrics.hpp"
#include "gravclocks/parallel.hpp"

namespace gravclocks::cli {

namespace {

namespace fs = std::filesystem;

constexpr double kPi = std::numbers::pi;

ParamSpec number(std::string name, Quantity q, std::string help, std::optional<std::string> def = {},
                 Bound bound = Bound::kPositive) {
  return {std::move(name), ParamKind::kNumber, q, bound, std::move(def), std::move(help), {}};
}

ParamSpec integer(std::string name, std::string help, std::optional<std::string> def = {}) {
  return {std::move(name), ParamKind::kInteger, Quantity::kDimensionless, Bound::kPositive,
          std::move(def), std::move(help), {}};
}

std::vector<ScenarioInfo> build_catalog() {
  using Q = Quantity;
  std::vector<ScenarioInfo> c;
  c.push_back({"two_clock_entanglement",
               "Two qubit clocks from |+>|+>: purity, entropy and visibility of clock A over time.",
               {number("epsilon", Q::kEnergy, "energy gap of both clocks"),
                number("xi", Q::kLength, "clock separation"),
                number("tau_max", Q::kTime, "end of the time grid; auto = 2 t_mix", "auto"),
                integer("steps", "number of grid intervals", "200")},
               {"two_clock_entanglement.csv", "two_clock_entanglement_summary.csv"}});
  c.push_back({"n_clock_visibility",
               "Visibility of one qubit clock among N others; t_d and Schwarzschild radius.",
               {number("epsilon", Q::kEnergy, "energy gap of every clock"),
                number("xi", Q::kLength, "common clock separation"),
                number("n_others", Q::kDimensionless, "number N of surrounding clocks"),
                number("tau_max", Q::kTime, "end of the time grid; auto = 3 t_d", "auto"),
                integer("steps", "number of grid intervals", "200")},
               {"n_clock_visibility.csv", "n_clock_visibility_summary.csv"}});
  c.push_back({"decoherence_map",
               "t_d over a log-spaced (energy gap, distance) grid with iso-contours.",
               {number("dE_min", Q::kEnergy, "lowest energy gap"),
                number("dE_max", Q::kEnergy, "highest energy gap"),
                number("x_min", Q::kLength, "smallest distance"),
                number("x_max", Q::kLength, "largest distance"),
                integer("n_energy", "energy grid points", "120"),
                integer("n_distance", "distance grid points", "120"),
                number("n_others", Q::kDimensionless, "number N of surrounding clocks"),
                {"levels", ParamKind::kNumberList, Q::kTime, Bound::kPositive, std::nullopt,
                 "comma-separated contour levels of t_d", {}}},
               {"decoherence_map.csv", "decoherence_map.pgm", "contours.csv", "decoherence_map_summary.csv"}});
  c.push_back({"classical_limit_bins",
               "Coarse azimuthal bins of clock B next to a spin-jA clock A, both coherent.",
               {integer("two_j_a", "2 jA"), integer("two_j_b", "2 jB"),
                number("epsilon", Q::kEnergy, "energy gap of both clocks"),
                number("xi", Q::kLength, "clock separation"),
                integer("bins", "number of bins 2 pi / R", "16"),
                number("t_over_tstar", Q::kDimensionless, "evaluation time in units of t*", "0.05",
                       Bound::kNonNegative)},
               {"classical_limit_bins.csv", "classical_limit_bins_summary.csv"}});
  c.push_back({"master_eq_compare",
               "Second-order master equation for clock B against the exact reduced dynamics.",
               {integer("two_j_a", "2 jA"), integer("two_j_b", "2 jB", "1"),
                number("epsilon", Q::kEnergy, "energy gap of both clocks"),
                number("xi", Q::kLength, "clock separation"),
                number("t_over_tstar_max", Q::kDimensionless, "end of the grid in units of t*", "0.1"),
                integer("steps", "number of grid intervals", "50"),
                {"kernel", ParamKind::kChoice, Q::kDimensionless, Bound::kAny, "interaction_frame",
                 "memory kernel", {"interaction_frame", "conjugated_phase"}}},
               {"master_eq_compare.csv", "master_eq_compare_summary.csv"}});
  c.push_back({"uncertainty_products",
               "Pointer-time spread of clock B next to a qubit clock A, and the heuristic product.",
               {number("epsilon_a", Q::kEnergy, "energy gap of qubit clock A"),
                number("epsilon_b", Q::kEnergy, "energy gap of clock B"),
                number("xi", Q::kLength, "clock separation"),
                number("tau", Q::kTime, "evaluation time"),
                {"two_j_b", ParamKind::kIntegerList, Q::kDimensionless, Bound::kPositive, "100,400",
                 "comma-separated values of 2 jB", {}}},
               {"uncertainty_products.csv", "uncertainty_products_summary.csv"}});
  c.push_back({"observer_distance",
               "Distance beyond which an observer clock cannot resolve the source state.",
               {number("epsilon_obs", Q::kEnergy, "energy gap of the observer clock"),
                number("epsilon_source", Q::kEnergy, "energy gap of the source clocks"),
                number("tau", Q::kTime, "observation time"),
                {"two_j", ParamKind::kIntegerList, Q::kDimensionless, Bound::kPositive, std::nullopt,
                 "comma-separated observer spins 2 j", {}},
                {"delta", ParamKind::kNumberList, Q::kDimensionless, Bound::kUnitInterval, std::nullopt,
                 "comma-separated overlap deficits in (0, 1)", {}}},
               {"observer_distance.csv"}});
  return c;
}

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::kTime: return "time [s | t_P]";
    case Quantity::kEnergy: return "energy [eV | E_P]";
    case Quantity::kLength: return "length [m | l_P]";
    default: return "dimensionless";
  }
}

double to_planck(double v, Quantity q, UnitSystem units, const PhysicalScales& s) {
  if (units == UnitSystem::kPlanck) return v;
  switch (q) {
    case Quantity::kTime: return to_tau(v, s);
    case Quantity::kEnergy: return to_epsilon(v * kElectronVolt, s);
    case Quantity::kLength: return to_xi(v, s);
    default: return v;
  }
}

bool within(double v, Bound b) {
  switch (b) {
    case Bound::kPositive: return v > 0.0;
    case Bound::kNonNegative: return v >= 0.0;
    case Bound::kUnitInterval: return v > 0.0 && v < 1.0;
    default: return true;
  }
}

const char* bound_text(Bound b) {
  switch (b) {
    case Bound::kPositive: return "positive";
    case Bound::kNonNegative: return "non-negative";
    case Bound::kUnitInterval: return "in (0, 1)";
    default: return "valid";
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

std::vector<double> linspace(double hi, long long steps) {
  std::vector<double> g(static_cast<std::size_t>(steps) + 1);
  for (long long i = 0; i <= steps; ++i) g[static_cast<std::size_t>(i)] = hi * static_cast<double>(i) / static_cast<double>(steps);
  return g;
}

class Output {
 public:
  explicit Output(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_)) throw OutputError("cannot create output directory " + dir_.string());
  }
  void write(const std::string& name, const std::string& text) {
    write_text_file(dir_ / name, text);
    files_.push_back(dir_ / name);
  }
  void write(const std::string& name, const CsvTable& t) { write(name, t.to_string()); }
  std::vector<fs::path> files() const { return files_; }

 private:
  fs::path dir_;
  std::vector<fs::path> files_;
};

struct Context {
  const ScenarioConfig& cfg;
  const Parameters& p;
  const PhysicalScales& s;
  std::size_t jobs;
  Output& out;
};

void add_constants(SummaryTable& t, const PhysicalScales& s) {
  t.add("G", Cell::real(s.G()));
  t.add("c", Cell::real(s.c()));
  t.add("hbar", Cell::real(s.hbar()));
}

void run_two_clock(Context& ctx) {
  const double eps = ctx.p.number("epsilon"), xi = ctx.p.number("xi");
  const double tmix = tau_mix(eps, xi);
  const double tau_max = ctx.p.has("tau_max") ? ctx.p.number("tau_max") : 2.0 * tmix;
  const auto grid = linspace(tau_max, ctx.p.integer("steps"));

  const DiagonalHamiltonian H = network_hamiltonian(ClockNetwork::qubits(2, eps, xi));
  const StateVector plus = coherent_state(SpinSpace(1), kPi / 2, 0.0);
  const StateVector psi0 = kron(plus, plus);
  const std::vector<std::size_t> dims{2, 2}, keep{0};
  auto reduced = [&](double tau) { return partial_trace(evolve_exact(psi0, H, tau), dims, keep); };

  std::vector<DensityMatrix> states(grid.size());
  parallel_for(grid.size(), ctx.jobs, [&](std::size_t i) { states[i] = reduced(grid[i]); });

  CsvTable table({"tau", "t_s", "purity", "entropy_bits", "visibility"});
  std::size_t imin = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double pur = purity(states[i]);
    if (pur < purity(states[imin])) imin = i;
    table.add_row({Cell::real(grid[i]), Cell::real(to_seconds(grid[i], ctx.s)), Cell::probability(pur),
                   Cell::real(entanglement_entropy(states[i])), Cell::probability(visibility(states[i]))});
  }
  ctx.out.write("two_clock_entanglement.csv", table);

  SummaryTable sum;
  add_constants(sum, ctx.s);
  sum.add("tau_mix", Cell::real(tmix));
  sum.add("t_mix_s", Cell::real(to_seconds(tmix, ctx.s)));
  sum.add("purity_at_tau_mix", Cell::probability(purity(reduced(tmix))));
  sum.add("purity_at_2tau_mix", Cell::probability(purity(reduced(2.0 * tmix))));
  sum.add("grid_min_purity", Cell::probability(purity(states[imin])));
  sum.add("grid_tau_at_min_purity", Cell::real(grid[imin]));
  ctx.out.write("two_clock_entanglement_summary.csv", sum.table());
}

void run_n_clock(Context& ctx) {
  const double eps = ctx.p.number("epsilon"), xi = ctx.p.number("xi"), n = ctx.p.number("n_others");
  const double td = tau_d(n, eps, xi);
  const double tau_max = ctx.p.has("tau_max") ? ctx.p.number("tau_max") : 3.0 * td;
  const auto grid = linspace(tau_max, ctx.p.integer("steps"));

  CsvTable table({"tau", "t_s", "visibility", "visibility_gaussian", "state_visibility"});
  for (double tau : grid)
    table.add_row({Cell::real(tau), Cell::real(to_seconds(tau, ctx.s)),
                   Cell::probability(visibility_closed_form(n, tau, eps, xi)),
                   Cell::probability(visibility_gaussian_approx(n, tau, eps, xi)),
                   Cell::probability(visibility(reduced_qubit_closed_form(n, tau, eps, xi)))});
  ctx.out.write("n_clock_visibility.csv", table);

  const double dE = to_joules(eps, ctx.s);
  SummaryTable sum;
  add_constants(sum, ctx.s);
  sum.add("epsilon", Cell::real(eps));
  sum.add("xi", Cell::real(xi));
  sum.add("dE_J", Cell::real(dE));
  sum.add("x_m", Cell::real(to_meters(xi, ctx.s)));
  sum.add("n_others", Cell::real(n));
  sum.add("tau_d", Cell::real(td));
  sum.add("t_d_s", Cell::real(to_seconds(td, ctx.s)));
  sum.add("visibility_at_tau_d", Cell::probability(visibility_closed_form(n, td, eps, xi)));
  sum.add("schwarzschild_radius_m", Cell::real(schwarzschild_radius(n, dE, ctx.s)));
  ctx.out.write("n_clock_visibility_summary.csv", sum.table());
}

std::string render_pgm(const Eigen::MatrixXd& log_td, double lo, double hi) {
  // Rows of log_td follow ascending x; the image puts the largest x on top.
  std::ostringstream img;
  img << "P2\n# log10 t_d from " << format_real(lo) << " (black) to " << format_real(hi)
      << " (white); columns ascend in energy, rows descend in distance\n"
      << log_td.cols() << ' ' << log_td.rows() << "\n255\n";
  const double span = hi > lo ? hi - lo : 1.0;
  for (Eigen::Index r = log_td.rows() - 1; r >= 0; --r) {
    for (Eigen::Index c = 0; c < log_td.cols(); ++c) {
      const long level = std::lround(255.0 * (log_td(r, c) - lo) / span);
      img << (c ? " " : "") << std::clamp(level, 0L, 255L);
    }
    img << '\n';
  }
  return img.str();
}

void run_decoherence_map(Context& ctx) {
  const auto& s = ctx.s;
  DecoherenceMapConfig cfg;
  cfg.dE_grid = DecoherenceMapConfig::log_spaced(to_joules(ctx.p.number("dE_min"), s),
                                                 to_joules(ctx.p.number("dE_max"), s),
                                                 static_cast<std::size_t>(ctx.p.integer("n_energy")));
  cfg.x_grid = DecoherenceMapConfig::log_spaced(to_meters(ctx.p.number("x_min"), s),
                                                to_meters(ctx.p.number("x_max"), s),
                                                static_cast<std::size_t>(ctx.p.integer("n_distance")));
  cfg.n_others = ctx.p.number("n_others");
  const DecoherenceMap map = decoherence_map(cfg, s, ctx.jobs);

  const Eigen::MatrixXd log_td = map.t_d.array().log10().matrix();
  CsvTable table({"x_m", "dE_J", "dE_eV", "t_d_s", "log10_t_d"});
  for (Eigen::Index r = 0; r < map.t_d.rows(); ++r)
    for (Eigen::Index c = 0; c < map.t_d.cols(); ++c) {
      const double dE = cfg.dE_grid[static_cast<std::size_t>(c)];
      table.add_row({Cell::real(cfg.x_grid[static_cast<std::size_t>(r)]), Cell::real(dE),
                     Cell::real(dE / kElectronVolt), Cell::real(map.t_d(r, c)), Cell::real(log_td(r, c))});
    }
  ctx.out.write("decoherence_map.csv", table);
  const double lo = log_td.minCoeff(), hi = log_td.maxCoeff();
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw NumericalGuardError("non-finite decoherence time");
  ctx.out.write("decoherence_map.pgm", render_pgm(log_td, lo, hi));

  CsvTable contours({"level_s", "dE_J", "dE_eV", "x_m", "x_analytic_m", "relative_deviation"});
  double worst = 0.0;
  const double c4 = std::pow(s.c(), 4);
  for (double level_planck : ctx.p.numbers("levels")) {
    const double level = to_seconds(level_planck, s);
    for (const ContourPoint& pt : extract_contour(map, level)) {
      const double x_an = std::sqrt(cfg.n_others) * s.G() * pt.dE * pt.dE * level / (2.0 * s.hbar() * c4);
      const double dev = pt.x / x_an - 1.0;
      worst = std::max(worst, std::abs(dev));
      contours.add_row({Cell::real(level), Cell::real(pt.dE), Cell::real(pt.dE / kElectronVolt),
                        Cell::real(pt.x), Cell::real(x_an), Cell::real(dev)});
    }
  }
  ctx.out.write("contours.csv", contours);

  SummaryTable sum;
  add_constants(sum, s);
  sum.add("n_others", Cell::real(cfg.n_others));
  sum.add("log10_t_d_min", Cell::real(lo));
  sum.add("log10_t_d_max", Cell::real(hi));
  sum.add("contour_points", Cell::integer(static_cast<long long>(contours.rows().size())));
  sum.add("max_contour_relative_deviation", Cell::real(worst));
  ctx.out.write("decoherence_map_summary.csv", sum.table());
}

void run_classical_bins(Context& ctx) {
  const SpinSpace a(static_cast<int>(ctx.p.integer("two_j_a")));
  const SpinSpace b(static_cast<int>(ctx.p.integer("two_j_b")));
  const double eps = ctx.p.number("epsilon"), xi = ctx.p.number("xi");
  const double ts = tau_star(a.j(), eps, xi);
  const double tau = ctx.p.number("t_over_tstar") * ts;

  const DensityMatrix rho = reduced_b_coherent_closed_form(a, b, eps, eps, xi, tau);
  const BinPOVM povm = build_povm_bins(b, static_cast<std::size_t>(ctx.p.integer("bins")));
  const std::vector<double> probs = bin_probabilities(rho, povm);

  CsvTable table({"bin", "lower", "upper", "center", "probability"});
  std::size_t kmax = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] > probs[kmax]) kmax = k;
    table.add_row({Cell::integer(static_cast<long long>(k)), Cell::real(povm.bin_lower(k)),
                   Cell::real(povm.bin_upper(k)), Cell::real(povm.bin_center(k)), Cell::probability(probs[k])});
  }
  ctx.out.write("classical_limit_bins.csv", table);

  const double dilation = 1.0 - a.j() * eps / xi;
  const double expected = wrap_angle(-tau * eps * dilation);
  const double offset = std::remainder(povm.bin_center(kmax) - expected, 2.0 * kPi);
  SummaryTable sum;
  sum.add("tau", Cell::real(tau));
  sum.add("tau_star", Cell::real(ts));
  sum.add("bin_width", Cell::real(povm.bin_width));
  sum.add("max_probability", Cell::probability(probs[kmax]));
  sum.add("max_bin", Cell::integer(static_cast<long long>(kmax)));
  sum.add("max_bin_center", Cell::real(povm.bin_center(kmax)));
  sum.add("dilation_factor", Cell::real(dilation));
  sum.add("expected_phase", Cell::real(expected));
  sum.add("center_offset", Cell::real(offset));
  sum.add("within_one_bin", Cell::integer(std::abs(offset) <= povm.bin_width ? 1 : 0));
  ctx.out.write("classical_limit_bins_summary.csv", sum.table());
}

void run_master_eq(Context& ctx) {
  const SpinSpace a(static_cast<int>(ctx.p.integer("two_j_a")));
  const SpinSpace b(static_cast<int>(ctx.p.integer("two_j_b")));
  const double eps = ctx.p.number("epsilon"), xi = ctx.p.number("xi");
  const MemoryKernel kernel = ctx.p.choice("kernel") == "conjugated_phase" ? MemoryKernel::kConjugatedPhase
                                                                           : MemoryKernel::kInteractionFrame;
  const MasterEqParams params = MasterEqParams::coherent(a, eps, xi, kernel);
  const double ts = tau_star(a.j(), eps, xi);
  const auto grid = linspace(ctx.p.number("t_over_tstar_max") * ts, ctx.p.integer("steps"));
  MasterEqOptions opts;
  opts.jobs = ctx.jobs;
  const MasterExactComparison cmp = compare_master_vs_exact(params, b, grid, opts);

  CsvTable table({"tau", "t_s", "master_coherence", "exact_coherence", "relative_error"});
  double worst = 0.0;
  for (std::size_t i = 0; i < cmp.times.size(); ++i) {
    worst = std::max(worst, cmp.relative_error[i]);
    table.add_row({Cell::real(cmp.times[i]), Cell::real(to_seconds(cmp.times[i], ctx.s)),
                   Cell::real(cmp.master_coherence[i]), Cell::real(cmp.exact_coherence[i]),
                   Cell::real(cmp.relative_error[i])});
  }
  ctx.out.write("master_eq_compare.csv", table);

  SummaryTable sum;
  sum.add("tau_star", Cell::real(ts));
  sum.add("rate_factor", Cell::real(params.rate_factor()));
  sum.add("decoherence_coefficient", Cell::real(params.decoherence_coefficient()));
  sum.add("step", Cell::real(default_master_step(params, b)));
  sum.add("max_relative_error", Cell::real(worst));
  if (std::isfinite(cmp.growth_exponent)) sum.add("growth_exponent", Cell::real(cmp.growth_exponent));
  sum.add("max_trace_defect", Cell::real(cmp.max_trace_defect));
  sum.add("max_hermiticity_defect", Cell::real(cmp.max_hermiticity_defect));
  ctx.out.write("master_eq_compare_summary.csv", sum.table());
}

void run_uncertainty(Context& ctx) {
  const double eps_a = ctx.p.number("epsilon_a"), eps_b = ctx.p.number("epsilon_b");
  const double xi = ctx.p.number("xi"), tau = ctx.p.number("tau");
  const auto& spins = ctx.p.integers("two_j_b");
  const double tP2 = ctx.s.planck_time() * ctx.s.planck_time();
  const double target = tau / (2.0 * xi);

  std::vector<PointerStatistics> stats(spins.size());
  parallel_for(spins.size(), ctx.jobs, [&](std::size_t i) {
    const SpinSpace b(static_cast<int>(spins[i]));
    const DensityMatrix rho = reduced_b_coherent_closed_form(SpinSpace(1), b, eps_a, eps_b, xi, tau);
    stats[i] = pointer_statistics(rho, pointer_operator(b, eps_b));
  });

  CsvTable table({"two_j_b", "dT_A", "delta_T", "product", "target", "relative_error", "product_s2", "target_s2"});
  for (std::size_t i = 0; i < spins.size(); ++i) {
    const double product = dT_A(eps_a) * stats[i].stddev;
    table.add_row({Cell::integer(spins[i]), Cell::real(dT_A(eps_a)), Cell::real(stats[i].stddev),
                   Cell::real(product), Cell::real(target), Cell::real(std::abs(product / target - 1.0)),
                   Cell::real(product * tP2), Cell::real(target * tP2)});
  }
  ctx.out.write("uncertainty_products.csv", table);

  const UncertaintyProduct h = heuristic_uncertainty_product(eps_a, xi, tau);
  SummaryTable sum;
  sum.add("heuristic_t_perp", Cell::real(h.t_perp));
  sum.add("heuristic_delta_t", Cell::real(h.delta_t));
  sum.add("heuristic_product", Cell::real(h.product));
  sum.add("heuristic_product_s2", Cell::real(h.product * tP2));
  sum.add("pointer_target", Cell::real(target));
  ctx.out.write("uncertainty_products_summary.csv", sum.table());
}

void run_observer(Context& ctx) {
  const double eps_obs = ctx.p.number("epsilon_obs"), eps_src = ctx.p.number("epsilon_source");
  const double tau = ctx.p.number("tau");
  CsvTable table({"two_j", "delta", "xi_bound", "xi_exact", "r_bound_m", "r_exact_m", "overlap_at_bound",
                  "overlap_at_exact"});
  for (long long two_j : ctx.p.integers("two_j"))
    for (double delta : ctx.p.numbers("delta")) {
      const double j = 0.5 * static_cast<double>(two_j);
      const double xb = min_observer_distance(delta, j, eps_obs, eps_src, tau);
      const double xe = min_observer_distance_exact(delta, j, eps_obs, eps_src, tau);
      table.add_row({Cell::integer(two_j), Cell::real(delta), Cell::real(xb), Cell::real(xe),
                     Cell::real(to_meters(xb, ctx.s)), Cell::real(to_meters(xe, ctx.s)),
                     Cell::probability(observer_overlap(j, eps_obs, eps_src, tau, xb)),
                     Cell::probability(observer_overlap(j, eps_obs, eps_src, tau, xe))});
    }
  ctx.out.write("observer_distance.csv", table);
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> catalog = build_catalog();
  return catalog;
}

const ScenarioInfo& scenario_info(const std::string& name) {
  for (const auto& info : scenario_catalog())
    if (info.name == name) return info;
  throw std::out_of_range("unknown scenario '" + name + "'");
}

bool Parameters::has(const std::string& name) const { return values_.count(name) > 0; }

const Parameters::Value& Parameters::at(const std::string& name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) throw std::out_of_range("parameter '" + name + "' not set");
  return it->second;
}

double Parameters::number(const std::string& name) const { return std::get<double>(at(name)); }
long long Parameters::integer(const std::string& name) const { return std::get<long long>(at(name)); }
const std::vector<double>& Parameters::numbers(const std::string& name) const {
  return std::get<std::vector<double>>(at(name));
}
const std::vector<long long>& Parameters::integers(const std::string& name) const {
  return std::get<std::vector<long long>>(at(name));
}
const std::string& Parameters::choice(const std::string& name) const { return std::get<std::string>(at(name)); }

Parameters validate_parameters(const ScenarioConfig& cfg) {
  const ScenarioInfo* info = nullptr;
  for (const auto& i : scenario_catalog())
    if (i.name == cfg.scenario) info = &i;
  if (!info)
    throw ConfigError(cfg.source, cfg.scenario_line,
                      "unknown scenario '" + cfg.scenario + "' (see --list-scenarios)");

  for (const auto& [key, value] : cfg.parameters) {
    const bool known = std::any_of(info->params.begin(), info->params.end(),
                                   [&](const ParamSpec& s) { return s.name == key; });
    if (!known) throw ConfigError(cfg.source, value.line, "unknown parameter '" + key + "' for " + info->name);
  }

  Parameters out;
  for (const ParamSpec& spec : info->params) {
    const auto it = cfg.parameters.find(spec.name);
    const int line = it == cfg.parameters.end() ? 0 : it->second.line;
    if (it == cfg.parameters.end() && !spec.default_value)
      throw ConfigError(cfg.source, 0, "missing required parameter '" + spec.name + "' for " + info->name);
    const std::string text = it == cfg.parameters.end() ? *spec.default_value : it->second.text;
    if (text == "auto" && spec.default_value == "auto") continue;

    auto fail = [&](const std::string& what) {
      throw ConfigError(cfg.source, line, "parameter '" + spec.name + "' " + what);
    };
    auto read_number = [&](const std::string& item) {
      double v = 0.0;
      if (!parse_double(item, v)) fail("expects a finite number, got '" + item + "'");
      if (!within(v, spec.bound)) fail(std::string("must be ") + bound_text(spec.bound));
      return to_planck(v, spec.quantity, cfg.units, cfg.scales);
    };
    auto read_integer = [&](const std::string& item) {
      long long v = 0;
      if (!parse_int(item, v)) fail("expects an integer, got '" + item + "'");
      if (!within(static_cast<double>(v), spec.bound)) fail(std::string("must be ") + bound_text(spec.bound));
      return v;
    };

    switch (spec.kind) {
      case ParamKind::kNumber: out.set(spec.name, read_number(text)); break;
      case ParamKind::kInteger: out.set(spec.name, read_integer(text)); break;
      case ParamKind::kNumberList: {
        std::vector<double> v;
        for (const auto& item : split_list(text)) v.push_back(read_number(item));
        out.set(spec.name, std::move(v));
        break;
      }
      case ParamKind::kIntegerList: {
        std::vector<long long> v;
        for (const auto& item : split_list(text)) v.push_back(read_integer(item));
        out.set(spec.name, std::move(v));
        break;
      }
      case ParamKind::kChoice:
        if (std::find(spec.choices.begin(), spec.choices.end(), text) == spec.choices.end()) {
          std::string allowed;
          for (const auto& c : spec.choices) allowed += (allowed.empty() ? "" : ", ") + c;
          fail("must be one of: " + allowed);
        }
        out.set(spec.name, text);
        break;
    }
  }
  return out;
}

std::vector<fs::path> run_scenario(const ScenarioConfig& cfg, const RunOptions& options) {
  const Parameters params = validate_parameters(cfg);
  const fs::path dir = options.output_dir.empty() ? cfg.output_dir : options.output_dir;
  if (dir.empty())
    throw ConfigError(cfg.source, 0, "no output directory: set output_dir in [run] or pass --out");

  Output out(dir);
  Context ctx{cfg, params, cfg.scales, std::max<std::size_t>(options.jobs, 1), out};
  try {
    if (cfg.scenario == "two_clock_entanglement") run_two_clock(ctx);
    else if (cfg.scenario == "n_clock_visibility") run_n_clock(ctx);
    else if (cfg.scenario == "decoherence_map") run_decoherence_map(ctx);
    else if (cfg.scenario == "classical_limit_bins") run_classical_bins(ctx);
    else if (cfg.scenario == "master_eq_compare") run_master_eq(ctx);
    else if (cfg.scenario == "uncertainty_products") run_uncertainty(ctx);
    else run_observer(ctx);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(cfg.source, cfg.scenario_line, e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(cfg.source, cfg.scenario_line, e.what());
  } catch (const std::length_error& e) {
    throw ConfigError(cfg.source, cfg.scenario_line, e.what());
  }
  return out.files();
}

std::string describe_scenarios() {
  std::ostringstream s;
  for (const auto& info : scenario_catalog()) {
    s << info.name << "\n  " << info.summary << "\n";
    for (const auto& p : info.params) {
      s << "    " << p.name << " (" << quantity_name(p.quantity) << ")";
      if (p.default_value) s << " = " << *p.default_value;
      else s << " required";
      s << ": " << p.help;
      if (!p.choices.empty()) {
        s << " {";
        for (std::size_t i = 0; i < p.choices.size(); ++i) s << (i ? ", " : "") << p.choices[i];
        s << "}";
      }
      s << "\n";
    }
    s << "    outputs:";
    for (const auto& f : info.outputs) s << " " << f;
    s << "\n";
  }
  return s.str();
}

}  // namespace gravclocks::cli
