// Command-line front end: evaluate the closed-form distributions on grids,
// validate them against the Monte Carlo oracle, draw reproducible samples,
// and run the beam codebook / routing utilities. All tabular output is CSV
// (12 significant digits, LF line endings).

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rectdist/applications.hpp"
#include "rectdist/dist2d.hpp"
#include "rectdist/dist3d.hpp"
#include "rectdist/montecarlo.hpp"
#include "rectdist/scenario_io.hpp"

namespace {

using namespace rectdist;

struct CommonOpts {
  std::string scenario;
  std::string out;
  bool degrees = false;
  std::optional<double> lx, ly, ux, uy, uz, vz;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--scenario", c.scenario,
                  "preset letter (O, A, B, C) or config file path")
      ->required();
  cmd->add_option("--out", c.out, "write CSV here instead of stdout");
  cmd->add_flag("--degrees", c.degrees,
                "interpret angular inputs (grid bounds, beamwidth) in degrees");
  cmd->add_option("--lx", c.lx, "override rectangle width");
  cmd->add_option("--ly", c.ly, "override rectangle height");
  cmd->add_option("--ux", c.ux, "override reference x");
  cmd->add_option("--uy", c.uy, "override reference y");
  cmd->add_option("--uz", c.uz, "override reference antenna height");
  cmd->add_option("--vz", c.vz, "override node height");
}

RectScenario resolve_scenario(const CommonOpts& c) {
  RectScenario s = load_scenario(c.scenario);
  if (c.lx) s.lx = *c.lx;
  if (c.ly) s.ly = *c.ly;
  if (c.ux) s.ux = *c.ux;
  if (c.uy) s.uy = *c.uy;
  if (c.uz) s.uz = *c.uz;
  if (c.vz) s.vz = *c.vz;
  validate_scenario(s);
  return s;
}

// One output axis: count points lo + i*(hi-lo)/count for i = 1..count
// (left-exclusive, right-inclusive).
struct AxisSpec {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
};

std::vector<double> axis_points(const AxisSpec& a) {
  std::vector<double> pts;
  pts.reserve(a.count);
  for (int i = 1; i <= a.count; ++i) {
    pts.push_back(a.lo + (a.hi - a.lo) * i / a.count);
  }
  return pts;
}

std::map<std::string, AxisSpec> parse_grid(const std::string& text) {
  std::map<std::string, AxisSpec> grid;
  if (text.empty()) return grid;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--grid entries must look like var=lo:hi:count");
    }
    const std::string var = item.substr(0, eq);
    AxisSpec a;
    char c1 = 0, c2 = 0;
    std::istringstream nums(item.substr(eq + 1));
    if (!(nums >> a.lo >> c1 >> a.hi >> c2 >> a.count) || c1 != ':' ||
        c2 != ':' || a.count < 1 || !(a.hi >= a.lo) || !nums.eof()) {
      throw CLI::ValidationError("bad --grid axis '" + item + "'");
    }
    grid[var] = a;
  }
  return grid;
}

constexpr double kDeg = kPi / 180.0;

AxisSpec pick_axis(const std::map<std::string, AxisSpec>& grid,
                   const std::string& var, AxisSpec fallback, bool degrees,
                   bool angular) {
  auto it = grid.find(var);
  if (it == grid.end()) return fallback;
  AxisSpec a = it->second;
  if (degrees && angular) {
    a.lo *= kDeg;
    a.hi *= kDeg;
  }
  return a;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
  return file;
}

void csv_row(std::ostream& os, const std::vector<double>& vals) {
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) os << ',';
    os << format_g12(vals[i]);
  }
  os << '\n';
}

int cmd_eval(const CommonOpts& common, const std::string& quantity,
             const std::string& grid_text) {
  const RectScenario s = resolve_scenario(common);
  const auto grid = parse_grid(grid_text);
  std::ofstream file;
  std::ostream& os = open_out(common.out, file);

  const bool deg = common.degrees;
  const DistributionEval2D ev(s);
  const AxisSpec r_axis =
      pick_axis(grid, "r", {0.0, ev.rmax, 20}, deg, false);
  const AxisSpec theta_axis =
      pick_axis(grid, "theta", {0.0, kTwoPi, 36}, deg, true);

  if (quantity == "joint-cdf-2d" || quantity == "joint-pdf-2d") {
    const bool pdf = quantity == "joint-pdf-2d";
    os << "r,theta,value\n";
    for (double r : axis_points(r_axis)) {
      for (double th : axis_points(theta_axis)) {
        csv_row(os, {r, th, pdf ? joint_pdf(ev, r, th) : joint_cdf(ev, r, th)});
      }
    }
    return 0;
  }
  if (quantity == "marg-az-cdf" || quantity == "marg-az-pdf") {
    const bool pdf = quantity == "marg-az-pdf";
    const AxisSpec ax = pick_axis(grid, "theta", {0.0, kTwoPi, 72}, deg, true);
    os << "theta,value\n";
    for (double th : axis_points(ax)) {
      csv_row(os, {th, pdf ? marginal_azimuth_pdf(ev, th)
                           : marginal_azimuth_cdf(ev, th)});
    }
    return 0;
  }

  // Remaining quantities need the node height.
  const DistributionEval3D ev3(s);
  const double dz = std::fabs(ev3.uz - ev3.vz);
  const double dmax = std::hypot(ev.rmax, dz);
  const AxisSpec psi_axis = pick_axis(grid, "psi", {0.0, kPi, 12}, deg, true);

  if (quantity == "joint-cdf-3d") {
    const AxisSpec d_axis = pick_axis(grid, "d", {dz, dmax, 20}, deg, false);
    const AxisSpec th_axis = pick_axis(grid, "theta", {0.0, kTwoPi, 12}, deg, true);
    os << "d,theta,psi,value\n";
    for (double d : axis_points(d_axis)) {
      for (double th : axis_points(th_axis)) {
        for (double ps : axis_points(psi_axis)) {
          csv_row(os, {d, th, ps, joint_cdf_3d(ev3, d, th, ps)});
        }
      }
    }
    return 0;
  }
  if (quantity == "ang-cdf" || quantity == "ang-pdf") {
    const bool pdf = quantity == "ang-pdf";
    const AxisSpec th_axis = pick_axis(grid, "theta", {0.0, kTwoPi, 36}, deg, true);
    os << "theta,psi,value\n";
    for (double th : axis_points(th_axis)) {
      for (double ps : axis_points(psi_axis)) {
        csv_row(os, {th, ps, pdf ? angular_pdf(ev3, th, ps)
                                 : angular_cdf(ev3, th, ps)});
      }
    }
    return 0;
  }
  throw CLI::ValidationError("unknown --quantity '" + quantity + "'");
}

int cmd_validate(const CommonOpts& common, std::size_t n, std::uint64_t seed) {
  const RectScenario s = resolve_scenario(common);
  const ValidationReport rep = validate(s, n, seed);
  std::ofstream file;
  std::ostream& os = open_out(common.out, file);
  write_validation_csv(rep, os);

  std::cerr << "sup_deviation=" << format_g12(rep.sup_deviation)
            << " n=" << rep.n_samples << " seed=" << rep.seed << "\n";
  if (rep.sup_deviation > 0.02) {
    std::cerr << "validation FAILED: deviation exceeds hard limit 0.02\n";
    return 2;
  }
  if (rep.sup_deviation > 0.01) {
    std::cerr << "warning: deviation exceeds 0.01\n";
  }
  return 0;
}

int cmd_sample(const CommonOpts& common, const std::string& mode,
               std::size_t n, std::uint64_t seed, const LinkBudget& budget,
               bool have_budget) {
  const RectScenario s = resolve_scenario(common);
  std::ofstream file;
  std::ostream& os = open_out(common.out, file);
  os << "# scenario_hash=" << scenario_hash_hex(s) << ",seed=" << seed << "\n";

  if (mode == "2d") {
    const SampleSet set = sample_points(s, n, seed);
    os << "x,y,r,theta\n";
    for (std::size_t i = 0; i < set.points.size(); ++i) {
      csv_row(os, {set.points[i].x, set.points[i].y, set.polar[i].r,
                   set.polar[i].theta});
    }
    return 0;
  }
  if (mode == "3d") {
    const SampleSet set = sample_points(s, n, seed);
    if (!s.vz) {
      throw std::invalid_argument("mode 3d needs a node height (vz)");
    }
    os << "d,theta,psi\n";
    for (const auto& p : set.polar) {
      const SphericalCoord sc = spherical_from_planar(p, s.uz, *s.vz);
      csv_row(os, {sc.d, sc.theta, sc.psi});
    }
    return 0;
  }
  if (mode == "snr") {
    if (!have_budget) {
      throw CLI::ValidationError(
          "mode snr requires --tau, --alpha, --rho-t and --n0");
    }
    const DistributionEval3D ev3(s);
    const auto iso = [](double, double) { return 1.0; };
    const std::vector<double> snr = snr_samples(
        ev3, budget, iso, iso, FadingSampler::unit(), n, seed);
    const SampleSet set = sample_points(s, n, seed);
    os << "d,theta,psi,snr\n";
    for (std::size_t i = 0; i < snr.size(); ++i) {
      const SphericalCoord sc =
          spherical_from_planar(set.polar[i], s.uz, *s.vz);
      csv_row(os, {sc.d, sc.theta, sc.psi, snr[i]});
    }
    return 0;
  }
  throw CLI::ValidationError("unknown --mode '" + mode + "'");
}

int cmd_codebook(const CommonOpts& common, int m) {
  const RectScenario s = resolve_scenario(common);
  const DistributionEval2D ev(s);
  const Codebook cb = design_codebook(ev, m);
  std::ofstream file;
  std::ostream& os = open_out(common.out, file);
  os << "# scenario_hash=" << scenario_hash_hex(s) << ",m=" << m << "\n";
  os << "index,boundary\n";
  for (std::size_t i = 0; i < cb.boundaries.size(); ++i) {
    os << i << ',' << format_g12(cb.boundaries[i]) << '\n';
  }
  return 0;
}

int cmd_route(const CommonOpts& common, double range, double beamwidth) {
  const RectScenario s = resolve_scenario(common);
  const DistributionEval2D ev(s);
  if (common.degrees) beamwidth *= kDeg;
  const RoutingChoice rc = routing_direction(ev, range, beamwidth);
  std::ofstream file;
  std::ostream& os = open_out(common.out, file);
  os << "theta,mass,zero_mass\n";
  os << format_g12(rc.theta) << ',' << format_g12(rc.mass) << ','
     << (rc.zero_mass ? 1 : 0) << '\n';
  if (rc.zero_mass) {
    std::cerr << "warning: no window captures any probability mass\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Distance/azimuth/zenith distributions of a uniform node in a "
      "rectangle, with a Monte Carlo cross-check and beam utilities"};
  app.require_subcommand(1);

  CommonOpts c_eval, c_val, c_samp, c_code, c_route;

  auto* eval = app.add_subcommand("eval", "evaluate a distribution on a grid");
  add_common(eval, c_eval);
  std::string quantity;
  eval->add_option("--quantity", quantity,
                   "joint-cdf-2d | joint-pdf-2d | marg-az-cdf | marg-az-pdf | "
                   "joint-cdf-3d | ang-cdf | ang-pdf")
      ->required();
  std::string grid_text;
  eval->add_option("--grid", grid_text,
                   "axis overrides var=lo:hi:count[,var=lo:hi:count...] for "
                   "r, theta, d, psi");

  auto* val = app.add_subcommand(
      "validate", "compare closed forms against a Monte Carlo draw");
  add_common(val, c_val);
  std::size_t val_n = 100000;
  std::uint64_t val_seed = 1;
  val->add_option("--n", val_n, "sample count");
  val->add_option("--seed", val_seed, "RNG seed");

  auto* samp = app.add_subcommand("sample", "draw reproducible node samples");
  add_common(samp, c_samp);
  std::string mode = "2d";
  std::size_t samp_n = 1000;
  std::uint64_t samp_seed = 1;
  samp->add_option("--mode", mode, "2d | 3d | snr");
  samp->add_option("--n", samp_n, "sample count");
  samp->add_option("--seed", samp_seed, "RNG seed");
  LinkBudget budget;
  auto* opt_tau = samp->add_option("--tau", budget.tau, "link-budget slope");
  auto* opt_alpha =
      samp->add_option("--alpha", budget.alpha, "path-loss exponent");
  auto* opt_rho = samp->add_option("--rho-t", budget.rho_t, "transmit power");
  auto* opt_n0 = samp->add_option("--n0", budget.n0, "noise power");
  samp->add_option("--exp-sign", budget.exponent_sign,
                   "path-loss exponent sign (-1 decay, +1 growth)");

  auto* code = app.add_subcommand(
      "codebook", "equal-probability azimuth sector boundaries");
  add_common(code, c_code);
  int m = 0;
  code->add_option("--m", m, "number of sectors")->required();

  auto* route = app.add_subcommand(
      "route", "azimuth window with the highest in-range probability");
  add_common(route, c_route);
  double range = 0.0, beamwidth = 0.0;
  route->add_option("--r-max", range, "maximum forwarding range")->required();
  route->add_option("--beamwidth", beamwidth, "window width")->required();

  try {
    app.parse(argc, argv);
    if (eval->parsed()) return cmd_eval(c_eval, quantity, grid_text);
    if (val->parsed()) return cmd_validate(c_val, val_n, val_seed);
    if (samp->parsed()) {
      const bool have_budget = opt_tau->count() && opt_alpha->count() &&
                               opt_rho->count() && opt_n0->count();
      return cmd_sample(c_samp, mode, samp_n, samp_seed, budget, have_budget);
    }
    if (code->parsed()) return cmd_codebook(c_code, m);
    if (route->parsed()) return cmd_route(c_route, range, beamwidth);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
