#include <cmath>
#include <numbers>
#include <string>

#include "slrc/errors.hpp"
#include "slrc/experiments/experiments.hpp"
#include "slrc/experiments/rng.hpp"
#include "slrc/hankel.hpp"

namespace slrc::experiments {

namespace {

// Length-(2d+1) sequence split into the known head and the reference tail.
struct HankelInstance {
  CVector known;
  CVector reference;
};

HankelInstance split(const CVector& full, int d) {
  return {full.head(d + 1), full.tail(d)};
}

CVector exponential_sum(const std::vector<Complex>& roots, int length) {
  CVector h = CVector::Zero(length);
  for (const auto& lambda : roots) {
    Complex power(1.0, 0.0);
    for (int k = 0; k < length; ++k) {
      h(k) += power;
      power *= lambda;
    }
  }
  return h;
}

std::vector<double> report_columns(const SolveReport& r) {
  return {r.distance_frobenius,
          r.distance_param,
          r.converged ? 1.0 : 0.0,
          static_cast<double>(r.iterations),
          static_cast<double>(r.rank),
          r.certificate.first_order ? 1.0 : 0.0,
          r.certificate.unique ? 1.0 : 0.0};
}

const std::vector<std::string> kReportNames = {"distance_frobenius", "distance_param", "converged",
                                               "iterations",         "rank",           "first_order",
                                               "unique"};

struct GridCell {
  std::vector<double> row;
  std::string certificate;
};

// Runs a 2D sweep where each cell builds its own full sequence of length 2d+1.
ExperimentOutput run_grid(const ExperimentConfig& config, const std::string& name,
                          const std::vector<std::string>& axis_names,
                          const std::vector<double>& row_axis, const std::vector<double>& col_axis,
                          int d, const std::function<CVector(double, double)>& sequence) {
  config.validate();
  const std::size_t rows = row_axis.size();
  const std::size_t cols = col_axis.size();
  const auto cells = parallel_map<GridCell>(rows * cols, config.workers, [&](std::size_t idx) {
    const std::size_t i = idx / cols;
    const std::size_t j = idx % cols;
    const auto inst = split(sequence(row_axis[i], col_axis[j]), d);
    const auto s = hankel::hankel_structure(inst.known);
    const auto report = solve_and_compare(s, inst.reference, config.solver, config.certificate);
    GridCell cell;
    cell.row = {static_cast<double>(i), static_cast<double>(j), row_axis[i], col_axis[j]};
    for (double v : report_columns(report)) cell.row.push_back(v);
    cell.certificate = relaxation::certificate_csv_row(
        "r" + std::to_string(i) + "c" + std::to_string(j), report.certificate);
    return cell;
  });

  ExperimentOutput out;
  out.grid.columns = {"row", "col", axis_names[0], axis_names[1]};
  out.grid.columns.insert(out.grid.columns.end(), kReportNames.begin(), kReportNames.end());
  std::size_t below = 0;
  for (const auto& c : cells) {
    out.grid.rows.push_back(c.row);
    out.certificate_rows.push_back(c.certificate);
    if (c.row[4] < config.threshold) ++below;
  }
  out.meta = base_meta(name, config);
  out.meta["order_n"] = d + 1;
  out.meta["row_axis"] = {{"name", axis_names[0]}, {"min", row_axis.front()}, {"max", row_axis.back()},
                          {"count", rows}};
  out.meta["col_axis"] = {{"name", axis_names[1]}, {"min", col_axis.front()}, {"max", col_axis.back()},
                          {"count", cols}};
  out.meta["cells_below_threshold"] = below;
  return out;
}

}  // namespace

ExperimentOutput run_fig2(const ExperimentConfig& config) {
  const auto axis = linspace(-0.95, 0.95, config.grid);
  constexpr int d = 5;
  auto out = run_grid(config, "fig2", {"imag", "real"}, axis, axis, d, [](double im, double re) {
    return exponential_sum({Complex(re, im)}, 2 * d + 1);
  });
  out.meta["sequence"] = "h_k = lambda^k, lambda = real + i*imag";
  return out;
}

ExperimentOutput run_fig3(const ExperimentConfig& config, Fig3Family family) {
  constexpr int d = 5;
  const auto rho = linspace(0.0, 0.99, config.grid);
  if (family == Fig3Family::Cosine) {
    const auto omega = linspace(0.0, 1.0, config.grid);
    auto out = run_grid(config, "fig3-cos", {"rho", "omega"}, rho, omega, d, [](double r, double w) {
      CVector h(2 * d + 1);
      for (int t = 0; t <= 2 * d; ++t)
        h(t) = std::pow(r, t) * std::cos(std::numbers::pi * (w + 1.0) * t);
      return h;
    });
    out.meta["sequence"] = "h_t = rho^t cos(pi (omega + 1) t)";
    return out;
  }
  const auto phi = linspace(0.0, 0.9, config.grid);
  auto out = run_grid(config, "fig3-double", {"rho", "phi"}, rho, phi, d, [](double r, double f) {
    const double slope = std::tan(0.75 * std::numbers::pi * f);
    CVector h(2 * d + 1);
    for (int t = 0; t <= 2 * d; ++t) h(t) = (t * slope + 1.0) * std::pow(r, t);
    return h;
  });
  out.meta["sequence"] = "h_t = (t tan(0.75 pi phi) + 1) rho^t";
  return out;
}

std::vector<Complex> fig4_roots(std::uint64_t seed, std::uint64_t stream, int r, double rho,
                                RootType type) {
  if (r < 1) throw InvalidInput("number of roots must be at least 1");
  Rng rng = Rng::stream(seed, stream);
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    // Radius first (fixed to rho for the leading root), then the angle.
    const double radius = k == 0 ? rho : rng.uniform(-rho, rho);
    if (type == RootType::Real) {
      roots.emplace_back(radius, 0.0);
    } else {
      const double angle = std::numbers::pi * rng.uniform();
      roots.push_back(std::polar(radius, angle));
    }
  }
  return roots;
}

ExperimentOutput run_fig4(const ExperimentConfig& config, RootType type) {
  config.validate();
  constexpr int d = 8;
  constexpr int max_rank = 4;
  const auto cols = static_cast<std::size_t>(config.grid);
  const auto trials = static_cast<std::size_t>(config.trials);
  std::vector<double> rhos(cols);
  for (std::size_t i = 0; i < cols; ++i) rhos[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(cols);

  const std::size_t cells = max_rank * cols;
  const auto reports = parallel_map<SolveReport>(cells * trials, config.workers, [&](std::size_t idx) {
    const std::size_t cell = idx / trials;
    const int r = static_cast<int>(cell / cols) + 1;
    const double rho = rhos[cell % cols];
    const auto inst = split(exponential_sum(fig4_roots(config.seed, idx, r, rho, type), 2 * d + 1), d);
    return solve_and_compare(hankel::hankel_structure(inst.known), inst.reference, config.solver,
                             config.certificate);
  });

  ExperimentOutput out;
  out.grid.columns = {"row",         "col",           "rank_r",          "rho",
                      "max_distance_frobenius",       "max_distance_param",
                      "success_trials", "converged_trials", "first_order_trials", "unique_trials"};
  for (std::size_t cell = 0; cell < cells; ++cell) {
    double worst_f = 0.0;
    double worst_p = 0.0;
    int success = 0, converged = 0, first_order = 0, unique = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& rep = reports[cell * trials + t];
      worst_f = std::max(worst_f, rep.distance_frobenius);
      worst_p = std::max(worst_p, rep.distance_param);
      success += rep.distance_frobenius < config.threshold;
      converged += rep.converged;
      first_order += rep.certificate.first_order;
      unique += rep.certificate.unique;
      out.certificate_rows.push_back(relaxation::certificate_csv_row(
          "cell" + std::to_string(cell) + "t" + std::to_string(t), rep.certificate));
    }
    out.grid.rows.push_back({static_cast<double>(cell / cols), static_cast<double>(cell % cols),
                             static_cast<double>(cell / cols + 1), rhos[cell % cols], worst_f, worst_p,
                             static_cast<double>(success), static_cast<double>(converged),
                             static_cast<double>(first_order), static_cast<double>(unique)});
  }
  out.meta = base_meta(type == RootType::Real ? "fig4-real" : "fig4-complex", config);
  out.meta["order_n"] = d + 1;
  out.meta["coefficients"] = "c_k = 1";
  out.meta["rho_grid"] = "rho_i = (i + 0.5) / grid";
  out.meta["stream_index"] = "cell * trials + trial, cell = (r - 1) * grid + i";
  return out;
}

}  // namespace slrc::experiments
