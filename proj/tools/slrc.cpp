// Command-line front end: experiment sweeps plus small exact-completion utilities.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "slrc/errors.hpp"
#include "slrc/experiments/experiments.hpp"
#include "slrc/hankel.hpp"
#include "slrc/quasihankel.hpp"

namespace fs = std::filesystem;
namespace ex = slrc::experiments;

namespace {

struct CommonFlags {
  std::uint64_t seed = 1;
  std::optional<int> grid;
  std::optional<int> trials;
  std::optional<double> threshold;
  std::string out = "out";
  double mu = 1.0;
  double tol = 1e-9;
  int max_iters = 50000;
  bool real_extension = false;
  int workers = 1;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--seed", f.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--grid", f.grid, "grid resolution per axis (radius sweep length for fig4/fig5)");
  cmd->add_option("--trials", f.trials, "trials per cell / realizations");
  cmd->add_option("--threshold", f.threshold, "success threshold on the reported distance");
  cmd->add_option("--out", f.out, "output directory")->capture_default_str();
  cmd->add_option("--mu", f.mu, "splitting penalty")->capture_default_str();
  cmd->add_option("--tol", f.tol, "primal and dual tolerance")->capture_default_str();
  cmd->add_option("--max-iters", f.max_iters, "iteration budget per solve")->capture_default_str();
  cmd->add_flag("--real-extension", f.real_extension, "iterate on the 2n x 2n real embedding");
  cmd->add_option("--workers", f.workers, "worker threads")->capture_default_str();
}

ex::ExperimentConfig make_config(const CommonFlags& f, int grid, int trials, double threshold) {
  ex::ExperimentConfig c;
  c.seed = f.seed;
  c.grid = f.grid.value_or(grid);
  c.trials = f.trials.value_or(trials);
  c.threshold = f.threshold.value_or(threshold);
  c.workers = f.workers;
  c.solver.mu = f.mu;
  c.solver.primal_tol = f.tol;
  c.solver.dual_tol = f.tol;
  c.solver.max_iters = f.max_iters;
  c.solver.use_real_extension = f.real_extension;
  return c;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw slrc::InvalidInput("cannot write " + path.string());
  return os;
}

void write_outputs(const fs::path& dir, const ex::Table& grid, const std::vector<std::string>& certs,
                   const nlohmann::json& meta) {
  fs::create_directories(dir);
  {
    auto os = open_out(dir / "grid.csv");
    grid.write_csv(os);
  }
  {
    auto os = open_out(dir / "certificates.csv");
    os << slrc::relaxation::certificate_csv_header() << '\n';
    for (const auto& row : certs) os << row << '\n';
  }
  {
    auto os = open_out(dir / "meta.json");
    os << meta.dump(2) << '\n';
  }
}

void write_heatmap(const fs::path& dir, const ex::Table& grid, const std::string& column, double threshold) {
  auto os = open_out(dir / "heatmap.pgm");
  os << ex::emit_heatmap(grid, column, threshold);
}

void dump_index_set(const std::string& path, const slrc::IndexSet& a) {
  if (path.empty()) return;
  auto os = open_out(path);
  slrc::write_index_set(os, a);
}

std::size_t count_below(const ex::Table& t, const std::string& column, double threshold) {
  const std::size_t c = t.column(column);
  std::size_t n = 0;
  for (const auto& row : t.rows) n += row[c] < threshold;
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hankel and quasi-Hankel minimal-rank completion: exact solutions, nuclear-norm relaxation, certificates"};
  app.require_subcommand(1);
  std::string index_dump;
  app.add_option("--index-set-dump", index_dump, "write the base index set of the run to this file");

  CommonFlags fig2, cos, dbl, fig4, fig5, nonu;
  auto* c_fig2 = app.add_subcommand("fig2", "rank-one sequences lambda^k over a complex grid");
  add_common(c_fig2, fig2);
  auto* c_cos = app.add_subcommand("fig3-cos", "damped cosine sequences over (rho, omega)");
  add_common(c_cos, cos);
  auto* c_dbl = app.add_subcommand("fig3-double", "double-root sequences over (rho, phi)");
  add_common(c_dbl, dbl);
  auto* c_fig4 = app.add_subcommand("fig4", "random roots, n = 9, max error over trials");
  add_common(c_fig4, fig4);
  std::string roots = "real";
  c_fig4->add_option("--roots", roots, "real or complex")->check(CLI::IsMember({"real", "complex"}))->capture_default_str();
  auto* c_fig5 = app.add_subcommand("fig5", "quasi-Hankel radius sweep, m = 2, d = 3, r = 3");
  add_common(c_fig5, fig5);
  auto* c_nonu = app.add_subcommand("nonunique", "tensor-derived completion without a unique solution");
  add_common(c_nonu, nonu);
  std::string scenario = "identity-A";
  c_nonu->add_option("--scenario", scenario, "dense-A or identity-A")
      ->check(CLI::IsMember({"dense-A", "identity-A"}))
      ->capture_default_str();

  auto* c_hankel = app.add_subcommand("hankel", "characteristic data and canonical completion of a sequence");
  std::string seq_path, seq_out;
  double hankel_tol = slrc::hankel::kDefaultTol;
  c_hankel->add_option("input", seq_path, "CSV with columns index,re,im")->required()->check(CLI::ExistingFile);
  c_hankel->add_option("--out", seq_out, "write h_0..h_2d as CSV");
  c_hankel->add_option("--tol", hankel_tol, "rank tolerance")->capture_default_str();

  auto* c_qh = app.add_subcommand("qhankel", "canonical completion of an exponential array");
  std::string qh_path, qh_out;
  int qh_degree = 3;
  c_qh->add_option("input", qh_path, "CSV of points and coefficients")->required()->check(CLI::ExistingFile);
  c_qh->add_option("--degree", qh_degree, "degree d of the known set T(m,d)")->capture_default_str();
  c_qh->add_option("--out", qh_out, "write the completed array as CSV");

  auto* c_heat = app.add_subcommand("heatmap", "render a grid CSV as a PGM image");
  std::string heat_in, heat_out = "heatmap.pgm", heat_column = "distance_frobenius";
  double heat_threshold = 1e-6;
  c_heat->add_option("input", heat_in, "grid CSV with row and col columns")->required()->check(CLI::ExistingFile);
  c_heat->add_option("--out", heat_out, "output file")->capture_default_str();
  c_heat->add_option("--column", heat_column, "value column")->capture_default_str();
  c_heat->add_option("--threshold", heat_threshold, "black below this value")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    auto grid_run = [&](const CommonFlags& f, ex::ExperimentOutput out, const std::string& column,
                        double threshold) {
      write_outputs(f.out, out.grid, out.certificate_rows, out.meta);
      write_heatmap(f.out, out.grid, column, threshold);
      std::cout << out.meta["experiment"].get<std::string>() << ": " << out.grid.rows.size() << " cells, "
                << count_below(out.grid, column, threshold) << " below " << threshold << "; wrote "
                << f.out << "/grid.csv\n";
    };

    if (*c_fig2) {
      dump_index_set(index_dump, slrc::triangle_set(1, 5));
      const auto cfg = make_config(fig2, 41, 1, 1e-6);
      grid_run(fig2, ex::run_fig2(cfg), "distance_frobenius", cfg.threshold);
    } else if (*c_cos) {
      dump_index_set(index_dump, slrc::triangle_set(1, 5));
      const auto cfg = make_config(cos, 41, 1, 1e-6);
      grid_run(cos, ex::run_fig3(cfg, ex::Fig3Family::Cosine), "distance_frobenius", cfg.threshold);
    } else if (*c_dbl) {
      dump_index_set(index_dump, slrc::triangle_set(1, 5));
      const auto cfg = make_config(dbl, 41, 1, 1e-6);
      grid_run(dbl, ex::run_fig3(cfg, ex::Fig3Family::DoubleRoot), "distance_frobenius", cfg.threshold);
    } else if (*c_fig4) {
      dump_index_set(index_dump, slrc::triangle_set(1, 8));
      const auto cfg = make_config(fig4, 41, 100, 1e-5);
      grid_run(fig4, ex::run_fig4(cfg, roots == "real" ? ex::RootType::Real : ex::RootType::Complex),
               "max_distance_frobenius", cfg.threshold);
    } else if (*c_fig5) {
      dump_index_set(index_dump, slrc::triangle_set(2, 3));
      const auto cfg = make_config(fig5, 20, 10, 1e-5);
      const auto out = ex::run_fig5(cfg);
      write_outputs(fig5.out, out.grid, out.certificate_rows, out.meta);
      std::cout << "fig5: rho0 per realization " << out.meta["rho0"].dump() << "; wrote " << fig5.out
                << "/grid.csv\n";
    } else if (*c_nonu) {
      dump_index_set(index_dump, slrc::triangle_set(2, 3));
      ex::NonUniqueConfig cfg;
      cfg.scenario = scenario == "dense-A" ? ex::Scenario::DenseA : ex::Scenario::IdentityA;
      cfg.trials = nonu.trials.value_or(100);
      cfg.seed = nonu.seed;
      cfg.threshold = nonu.threshold.value_or(1e-4);
      cfg.workers = nonu.workers;
      cfg.solver = make_config(nonu, 2, 1, 1e-4).solver;
      const auto out = ex::run_nonunique(cfg);
      write_outputs(nonu.out, out.trials, out.certificate_rows, out.meta);
      std::cout << "nonunique " << scenario << ": " << out.successes << " of " << cfg.trials
                << " succeeded (" << out.redraws << " redraws); wrote " << nonu.out << "/grid.csv\n";
    } else if (*c_hankel) {
      std::ifstream is(seq_path);
      const auto h = slrc::hankel::read_sequence_csv(is);
      dump_index_set(index_dump, slrc::triangle_set(1, static_cast<int>(h.size()) - 1));
      const auto info = slrc::hankel::characteristic_info(h, hankel_tol);
      std::cout << "rank " << info.rank << "\nunique " << (slrc::hankel::is_unique_completion(h, hankel_tol) ? "yes" : "no")
                << "\nq";
      for (const auto& v : info.q) std::cout << ' ' << v;
      std::cout << "\nroots";
      for (const auto& r : info.roots) std::cout << ' ' << r.value << '^' << r.multiplicity;
      std::cout << '\n';
      if (!seq_out.empty()) {
        const auto tail = slrc::hankel::canonical_completion(h, info.q, hankel_tol);
        slrc::CVector full(h.size() + tail.size());
        full << h, tail;
        auto os = open_out(seq_out);
        slrc::hankel::write_sequence_csv(os, full);
      }
    } else if (*c_qh) {
      std::ifstream is(qh_path);
      const auto problem = slrc::quasihankel::read_problem_csv(is, qh_degree);
      dump_index_set(index_dump, slrc::triangle_set(problem.m, problem.d));
      const auto completion = slrc::quasihankel::canonical_completion(problem);
      std::cout << "rank " << completion.rank << "\nunique " << (completion.unique ? "yes" : "no") << '\n';
      if (!qh_out.empty()) {
        auto os = open_out(qh_out);
        slrc::write_coefficient_csv(os, completion.array);
      }
    } else if (*c_heat) {
      std::ifstream is(heat_in);
      const auto grid = ex::read_table_csv(is);
      auto os = open_out(heat_out);
      os << ex::emit_heatmap(grid, heat_column, heat_threshold);
    }
  } catch (const std::exception& e) {
    std::cerr << "slrc: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
