#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "slrc/errors.hpp"
#include "slrc/experiments/experiments.hpp"
#include "slrc/experiments/rng.hpp"
#include "slrc/linalg.hpp"

namespace slrc::experiments {

namespace {

RMatrix scenario_matrix(Scenario scenario) {
  return scenario == Scenario::DenseA ? RMatrix::Constant(3, 3, 3.0) : RMatrix(3.0 * RMatrix::Identity(3, 3));
}

double condition_number(const RMatrix& v) {
  Eigen::JacobiSVD<RMatrix> svd(v);
  const auto& s = svd.singularValues();
  return s(s.size() - 1) > 0.0 ? s(0) / s(s.size() - 1) : INFINITY;
}

// Smallest |b_eps,1| relative to the scale of v; a zero would put a node at infinity.
double smallest_leading(const RMatrix& v, const std::array<double, 3>& gamma) {
  double smallest = INFINITY;
  for (int e2 = 0; e2 <= 1; ++e2)
    for (int e3 = 0; e3 <= 1; ++e3) {
      const double b1 = gamma[0] * v(0, 0) + (e2 ? -1.0 : 1.0) * gamma[1] * v(0, 1) +
                        (e3 ? -1.0 : 1.0) * gamma[2] * v(0, 2);
      smallest = std::min(smallest, std::abs(b1));
    }
  return smallest / std::max(1.0, v.norm());
}

}  // namespace

void NonUniqueConfig::validate() const {
  if (trials < 1) throw InvalidInput("trial count must be at least 1");
  if (!(threshold > 0.0)) throw InvalidInput("threshold must be positive");
  if (std::abs(gamma[0] * gamma[1] * gamma[2] - 1.0) > 1e-12)
    throw InvalidInput("gamma entries must multiply to 1");
  if (!(max_condition > 1.0)) throw InvalidInput("condition limit must exceed 1");
  solver.validate();
}

TensorTerms nonunique_terms(const RMatrix& v, const std::array<double, 3>& gamma) {
  if (v.rows() != 3 || v.cols() != 3) throw DimensionMismatch("expected three vectors in R^3");
  TensorTerms terms;
  for (int e2 = 0; e2 <= 1; ++e2) {
    for (int e3 = 0; e3 <= 1; ++e3) {
      const double s2 = e2 ? -1.0 : 1.0;
      const double s3 = e3 ? -1.0 : 1.0;
      const Eigen::Vector3d b = gamma[0] * v.col(0) + s2 * gamma[1] * v.col(1) + s3 * gamma[2] * v.col(2);
      if (b(0) == 0.0) throw InvalidInput("leading entry of a combined vector vanishes");
      terms.coeffs.emplace_back(s2 * s3 * b(0) * b(0) * b(0) / 24.0, 0.0);
      Point node(2);
      node << b(1) / b(0), b(2) / b(0);
      terms.nodes.push_back(node);
    }
  }
  return terms;
}

RMatrix draw_vectors(std::uint64_t seed, std::uint64_t trial, Scenario scenario,
                     const std::array<double, 3>& gamma, double max_condition, int& redraws) {
  Rng rng = Rng::stream(seed, trial);
  const RMatrix base = scenario_matrix(scenario);
  for (;;) {
    RMatrix v = base;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) v(i, j) += rng.uniform(-1.0, 1.0);
    if (condition_number(v) <= max_condition && smallest_leading(v, gamma) > 1e-8) return v;
    ++redraws;
  }
}

NonUniqueTrial run_nonunique_instance(const RMatrix& v, const NonUniqueConfig& config) {
  const TensorTerms terms = nonunique_terms(v, config.gamma);
  const IndexSet a = triangle_set(2, 3);
  const QuasiHankelStructure s(a, exp_array_on(a, terms.nodes, terms.coeffs));
  const CVector reference = s.parameters_from(exp_array(a, terms.nodes, terms.coeffs));

  relaxation::SolverResult result;
  NonUniqueTrial trial;
  try {
    result = relaxation::minimize_nuclear_norm(s, config.solver);
    trial.converged = true;
  } catch (const relaxation::NonConvergence& e) {
    result = e.last_result();
  }
  trial.iterations = result.iterations;
  trial.tail_norm = result.singular_values.tail(result.singular_values.size() - 4).norm();
  trial.distance_reference = (result.p - reference).norm();
  trial.rank = result.rank;
  trial.reference_rank = numerical_rank(s.assemble(reference), config.solver.rank_tol);
  trial.certificate = relaxation::certificate(s, result.p, config.certificate);
  return trial;
}

NonUniqueOutput run_nonunique(const NonUniqueConfig& config) {
  config.validate();
  const auto count = static_cast<std::size_t>(config.trials);
  std::vector<RMatrix> draws(count);
  int redraws = 0;
  for (std::size_t t = 0; t < count; ++t)
    draws[t] = draw_vectors(config.seed, t, config.scenario, config.gamma, config.max_condition, redraws);

  const auto trials = parallel_map<NonUniqueTrial>(count, config.workers, [&](std::size_t t) {
    return run_nonunique_instance(draws[t], config);
  });

  NonUniqueOutput out;
  out.redraws = redraws;
  out.trials.columns = {"trial", "success", "tail_norm", "converged", "iterations", "rank",
                        "reference_rank", "distance_reference", "first_order", "unique", "condition"};
  for (std::size_t t = 0; t < count; ++t) {
    const auto& r = trials[t];
    const bool success = r.tail_norm < config.threshold;
    out.successes += success;
    out.trials.rows.push_back({static_cast<double>(t), success ? 1.0 : 0.0, r.tail_norm,
                               r.converged ? 1.0 : 0.0, static_cast<double>(r.iterations),
                               static_cast<double>(r.rank), static_cast<double>(r.reference_rank),
                               r.distance_reference, r.certificate.first_order ? 1.0 : 0.0,
                               r.certificate.unique ? 1.0 : 0.0, condition_number(draws[t])});
    out.certificate_rows.push_back(relaxation::certificate_csv_row("trial" + std::to_string(t), r.certificate));
  }
  out.meta = {{"experiment", "nonunique"},
              {"scenario", config.scenario == Scenario::DenseA ? "dense-A" : "identity-A"},
              {"seed", config.seed},
              {"trials", config.trials},
              {"threshold", config.threshold},
              {"gamma", config.gamma},
              {"max_condition", config.max_condition},
              {"redraws", redraws},
              {"successes", out.successes},
              {"library_version", kLibraryVersion},
              {"rng", "xoshiro256** seeded by splitmix64, one stream per trial"},
              {"perturbation", "E(i,j) uniform on [-1, 1], drawn row by row"},
              {"solver",
               {{"mu", config.solver.mu},
                {"max_iters", config.solver.max_iters},
                {"primal_tol", config.solver.primal_tol},
                {"dual_tol", config.solver.dual_tol},
                {"use_real_extension", config.solver.use_real_extension}}}};
  return out;
}

}  // namespace slrc::experiments
