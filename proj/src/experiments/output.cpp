#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "slrc/errors.hpp"
#include "slrc/experiments/experiments.hpp"

namespace slrc::experiments {

void Table::write_csv(std::ostream& os) const {
  for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
  os << '\n';
  char buf[32];
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", row[c]);
      os << (c ? "," : "") << buf;
    }
    os << '\n';
  }
}

std::size_t Table::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw InvalidInput("table has no column named " + name);
  return static_cast<std::size_t>(it - columns.begin());
}

Table read_table_csv(std::istream& is) {
  Table t;
  std::string line;
  if (!std::getline(is, line)) throw InvalidInput("table CSV is empty");
  std::string field;
  {
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) t.columns.push_back(field);
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<double> row;
    while (std::getline(ls, field, ',')) row.push_back(std::stod(field));
    if (row.size() != t.columns.size()) throw InvalidInput("ragged table row: " + line);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw InvalidInput("linspace needs at least two points");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return out;
}

void ExperimentConfig::validate() const {
  if (grid < 2) throw InvalidInput("grid resolution must be at least 2");
  if (trials < 1) throw InvalidInput("trial count must be at least 1");
  if (!(threshold > 0.0)) throw InvalidInput("threshold must be positive");
  solver.validate();
}

nlohmann::json base_meta(const std::string& experiment, const ExperimentConfig& config) {
  return {{"experiment", experiment},
          {"seed", config.seed},
          {"grid", config.grid},
          {"trials", config.trials},
          {"workers", config.workers},
          {"threshold", config.threshold},
          {"library_version", kLibraryVersion},
          {"rng", "xoshiro256** seeded by splitmix64, one stream per work item"},
          {"solver",
           {{"mu", config.solver.mu},
            {"max_iters", config.solver.max_iters},
            {"primal_tol", config.solver.primal_tol},
            {"dual_tol", config.solver.dual_tol},
            {"use_real_extension", config.solver.use_real_extension},
            {"rank_tol", config.solver.rank_tol}}},
          {"certificate",
           {{"rank_tol", config.certificate.rank_tol},
            {"first_order_slack", config.certificate.first_order_slack},
            {"unique_slack", config.certificate.unique_slack},
            {"sigma_min_floor", config.certificate.sigma_min_floor},
            {"residual_tol", config.certificate.residual_tol},
            {"refine", config.certificate.refine},
            {"refine_iters", config.certificate.refine_iters}}}};
}

SolveReport solve_and_compare(const QuasiHankelStructure& s, const CVector& reference,
                              const relaxation::SolverConfig& solver,
                              const relaxation::CertificateOptions& options) {
  relaxation::SolverResult result;
  SolveReport report;
  try {
    result = relaxation::minimize_nuclear_norm(s, solver);
    report.converged = true;
  } catch (const relaxation::NonConvergence& e) {
    result = e.last_result();
  }
  report.p = result.p;
  report.iterations = result.iterations;
  report.singular_values = result.singular_values;
  report.rank = result.rank;
  report.distance_param = (result.p - reference).norm();
  report.distance_frobenius = (s.assemble(result.p) - s.assemble(reference)).norm();
  report.certificate = relaxation::certificate(s, result.p, options);
  return report;
}

std::string emit_heatmap(const Table& grid, const std::string& value_column, double threshold) {
  if (!(threshold > 0.0)) throw InvalidInput("threshold must be positive");
  const std::size_t rc = grid.column("row");
  const std::size_t cc = grid.column("col");
  const std::size_t vc = grid.column(value_column);
  long height = 0;
  long width = 0;
  for (const auto& row : grid.rows) {
    height = std::max(height, std::lround(row[rc]) + 1);
    width = std::max(width, std::lround(row[cc]) + 1);
  }
  if (height == 0 || width == 0) throw InvalidInput("grid has no cells");
  std::string pixels(static_cast<std::size_t>(height * width), static_cast<char>(255));
  for (const auto& row : grid.rows) {
    const double v = row[vc];
    unsigned char level = 255;
    if (std::isfinite(v)) {
      if (v < threshold) {
        level = 0;
      } else {
        const double decades = std::min(1.0, std::log10(v / threshold) / 6.0);
        level = static_cast<unsigned char>(1 + std::lround(254.0 * decades));
      }
    }
    const long r = std::lround(row[rc]);
    const long c = std::lround(row[cc]);
    if (r < 0 || c < 0) throw InvalidInput("negative cell coordinates");
    pixels[static_cast<std::size_t>(r * width + c)] = static_cast<char>(level);
  }
  return "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n" + pixels;
}

}  // namespace slrc::experiments
