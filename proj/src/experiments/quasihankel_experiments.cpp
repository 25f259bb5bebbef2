#include <string>

#include "slrc/errors.hpp"
#include "slrc/experiments/experiments.hpp"
#include "slrc/experiments/rng.hpp"
#include "slrc/quasihankel.hpp"

namespace slrc::experiments {

namespace {

constexpr int kDim = 2;
constexpr int kDegree = 3;
constexpr int kRank = 3;

// Entries a + ib with a, b uniform on [-0.5, 0.5], redrawn until the points
// are T(2,1)-independent.
PointList draw_points(Rng& rng, int& redraws) {
  const IndexSet b = triangle_set(kDim, kDegree / 2);
  for (;;) {
    PointList y;
    for (int k = 0; k < kRank; ++k) {
      Point z(kDim);
      for (int l = 0; l < kDim; ++l) {
        const double re = rng.uniform(-0.5, 0.5);
        const double im = rng.uniform(-0.5, 0.5);
        z(l) = Complex(re, im);
      }
      y.push_back(z);
    }
    if (is_independent(b, y)) return y;
    ++redraws;
  }
}

}  // namespace

double empirical_radius(const std::vector<double>& rhos, const std::vector<double>& distances,
                        double threshold) {
  if (rhos.size() != distances.size()) throw InvalidInput("radius and distance lists differ in length");
  double radius = 0.0;
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    if (!(distances[i] < threshold)) break;
    radius = rhos[i];
  }
  return radius;
}

ExperimentOutput run_fig5(const ExperimentConfig& config) {
  config.validate();
  const auto sweep = static_cast<std::size_t>(config.grid);
  const auto realizations = static_cast<std::size_t>(config.trials);
  std::vector<double> rhos(sweep);
  for (std::size_t i = 0; i < sweep; ++i) rhos[i] = static_cast<double>(i + 1) / static_cast<double>(sweep);

  std::vector<PointList> points(realizations);
  int redraws = 0;
  for (std::size_t j = 0; j < realizations; ++j) {
    Rng rng = Rng::stream(config.seed, j);
    points[j] = draw_points(rng, redraws);
  }

  const IndexSet a = triangle_set(kDim, kDegree);
  const auto reports = parallel_map<SolveReport>(realizations * sweep, config.workers, [&](std::size_t idx) {
    const std::size_t j = idx / sweep;
    const double rho = rhos[idx % sweep];
    quasihankel::CanonicalProblem problem{kDim, kDegree, {}, std::vector<Complex>(kRank, 1.0)};
    for (const auto& y : points[j]) problem.points.push_back(rho * y);
    const auto completion = quasihankel::canonical_completion(problem);
    const QuasiHankelStructure s(a, quasihankel::known_values(problem));
    return solve_and_compare(s, s.parameters_from(completion.array), config.solver, config.certificate);
  });

  ExperimentOutput out;
  out.grid.columns = {"row",       "col",  "realization", "rho",         "distance_param",
                      "distance_frobenius", "converged",   "iterations", "rank", "first_order",
                      "unique"};
  nlohmann::json radii = nlohmann::json::array();
  for (std::size_t j = 0; j < realizations; ++j) {
    std::vector<double> dist(sweep);
    for (std::size_t i = 0; i < sweep; ++i) {
      const auto& r = reports[j * sweep + i];
      dist[i] = r.distance_param;
      out.grid.rows.push_back({static_cast<double>(j), static_cast<double>(i), static_cast<double>(j),
                               rhos[i], r.distance_param, r.distance_frobenius, r.converged ? 1.0 : 0.0,
                               static_cast<double>(r.iterations), static_cast<double>(r.rank),
                               r.certificate.first_order ? 1.0 : 0.0, r.certificate.unique ? 1.0 : 0.0});
      out.certificate_rows.push_back(relaxation::certificate_csv_row(
          "real" + std::to_string(j) + "rho" + std::to_string(i), r.certificate));
    }
    radii.push_back(empirical_radius(rhos, dist, config.threshold));
  }
  out.meta = base_meta("fig5", config);
  out.meta["m"] = kDim;
  out.meta["d"] = kDegree;
  out.meta["r"] = kRank;
  out.meta["coefficients"] = "c_k = 1";
  out.meta["rho_sweep"] = "rho_i = i / grid, i = 1..grid";
  out.meta["point_redraws"] = redraws;
  out.meta["rho0"] = radii;
  return out;
}

}  // namespace slrc::experiments
