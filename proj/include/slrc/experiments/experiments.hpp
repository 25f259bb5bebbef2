#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <iosfwd>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "slrc/relaxation/certificate.hpp"
#include "slrc/relaxation/solver.hpp"
#include "slrc/structure.hpp"

namespace slrc::experiments {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// Column-named numeric table written as CSV.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void write_csv(std::ostream& os) const;
  std::size_t column(const std::string& name) const;  // throws InvalidInput
};

Table read_table_csv(std::istream& is);

struct ExperimentConfig {
  std::uint64_t seed = 1;
  int grid = 41;     ///< resolution per axis (radius sweep length for fig4/fig5)
  int trials = 100;  ///< M
  int workers = 1;
  double threshold = 1e-6;
  relaxation::SolverConfig solver;
  relaxation::CertificateOptions certificate;

  void validate() const;
};

struct ExperimentOutput {
  Table grid;
  std::vector<std::string> certificate_rows;  ///< relaxation::certificate_csv_row lines
  nlohmann::json meta;
};

/// Outcome of one nuclear-norm solve compared against a reference completion.
struct SolveReport {
  CVector p;
  bool converged = false;
  int iterations = 0;
  double distance_frobenius = 0.0;  ///< ||S(p) - S(p_ref)||_F
  double distance_param = 0.0;      ///< ||p - p_ref||_2
  RVector singular_values;
  int rank = 0;
  relaxation::Certificate certificate;
};

/// Solves and compares; a NonConvergence is recorded rather than rethrown.
SolveReport solve_and_compare(const QuasiHankelStructure& s, const CVector& reference,
                              const relaxation::SolverConfig& solver,
                              const relaxation::CertificateOptions& options);

/// Evaluates f(i) for i in [0, count) on `workers` threads. Results land in
/// slot order regardless of scheduling; the first exception is rethrown.
template <class Result>
std::vector<Result> parallel_map(std::size_t count, int workers,
                                 const std::function<Result(std::size_t)>& f) {
  std::vector<Result> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = workers < 1 ? 1 : workers;
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// Seed, sizes, solver and certificate settings and the library version.
nlohmann::json base_meta(const std::string& experiment, const ExperimentConfig& config);

/// n evenly spaced values from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int n);

// Hankel studies.
ExperimentOutput run_fig2(const ExperimentConfig& config);

enum class Fig3Family { Cosine, DoubleRoot };
ExperimentOutput run_fig3(const ExperimentConfig& config, Fig3Family family);

enum class RootType { Real, Complex };
ExperimentOutput run_fig4(const ExperimentConfig& config, RootType roots);

/// Roots for one fig4 trial: the leading root has modulus rho, the others
/// have radii uniform on [-rho, rho].
std::vector<Complex> fig4_roots(std::uint64_t seed, std::uint64_t stream, int r, double rho,
                                RootType type);

// Quasi-Hankel radius study (m = 2, d = 3, r = 3).
ExperimentOutput run_fig5(const ExperimentConfig& config);
/// Largest sweep value up to which every distance stays below threshold;
/// 0 when the first one already fails. rhos must be increasing.
double empirical_radius(const std::vector<double>& rhos, const std::vector<double>& distances,
                        double threshold);

// Non-unique tensor-derived completion (m = 2, d = 3).
enum class Scenario { DenseA, IdentityA };

struct NonUniqueConfig {
  Scenario scenario = Scenario::IdentityA;
  int trials = 100;
  std::uint64_t seed = 1;
  double threshold = 1e-4;  ///< on ||(sigma_5..sigma_10)||_2
  std::array<double, 3> gamma{1.0, 1.0, 1.0};
  double max_condition = 1e8;
  int workers = 1;
  relaxation::SolverConfig solver;
  relaxation::CertificateOptions certificate;

  void validate() const;
};

struct NonUniqueOutput {
  int successes = 0;
  int redraws = 0;
  Table trials;
  std::vector<std::string> certificate_rows;
  nlohmann::json meta;
};

/// Exponential-sum terms (weights c_eps, nodes lambda_eps) of the rank-4
/// decomposition built from the columns of v.
struct TensorTerms {
  std::vector<Complex> coeffs;
  PointList nodes;
};
TensorTerms nonunique_terms(const RMatrix& v, const std::array<double, 3>& gamma);

struct NonUniqueTrial {
  bool converged = false;
  int iterations = 0;
  double tail_norm = 0.0;          ///< ||(sigma_5..sigma_10)||_2
  double distance_reference = 0.0;  ///< ||p - p_ref||_2
  int rank = 0;
  int reference_rank = 0;
  relaxation::Certificate certificate;
};

NonUniqueTrial run_nonunique_instance(const RMatrix& v, const NonUniqueConfig& config);
NonUniqueOutput run_nonunique(const NonUniqueConfig& config);
/// The 3x3 matrix A + E, redrawn while ill-conditioned; `redraws` counts retries.
RMatrix draw_vectors(std::uint64_t seed, std::uint64_t trial, Scenario scenario,
                     const std::array<double, 3>& gamma, double max_condition, int& redraws);

// Rendering.
/// Binary PGM (P5) with one pixel per (row, col) cell of the table. Cells
/// below threshold are black; others are log-scaled over six decades.
std::string emit_heatmap(const Table& grid, const std::string& value_column, double threshold);

}  // namespace slrc::experiments
