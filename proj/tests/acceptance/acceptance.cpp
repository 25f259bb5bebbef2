// End-to-end checks; prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/SVD>

#include "../oracles/brute_force.hpp"
#include "../oracles/exact_rank.hpp"
#include "slrc/experiments/experiments.hpp"
#include "slrc/hankel.hpp"
#include "slrc/linalg.hpp"
#include "slrc/quasihankel.hpp"
#include "slrc/relaxation/certificate.hpp"
#include "slrc/relaxation/projectors.hpp"
#include "slrc/relaxation/solver.hpp"

using namespace slrc;
namespace ex = slrc::experiments;
namespace rx = slrc::relaxation;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

CVector geometric(Complex lambda, int length) {
  CVector h(length);
  Complex v = 1.0;
  for (int k = 0; k < length; ++k, v *= lambda) h(k) = v;
  return h;
}

PointList random_points(std::mt19937& gen, int m, int r, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  PointList pts;
  for (int k = 0; k < r; ++k) {
    Point z(m);
    for (int l = 0; l < m; ++l) z(l) = Complex(u(gen), u(gen));
    pts.push_back(z);
  }
  return pts;
}

Outcome rank_one_recovery() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  int unique = 0, total = 0;
  for (double mag : {0.1, 0.3, 0.5, 0.7, 0.9})
    for (double lambda : {mag, -mag}) {
      const CVector full = geometric(lambda, 11);
      const auto s = hankel::hankel_structure(full.head(6));
      const auto rep = ex::solve_and_compare(s, full.tail(5), {}, {});
      worst = std::max(worst, rep.distance_frobenius);
      unique += rep.certificate.unique;
      ++total;
    }
  const double elapsed = seconds_since(t0);
  return {worst < 1e-5 && unique == total && elapsed < 5.0,
          fmt("max distance %.2e, unique %d/%d, %.2f s", worst, unique, total, elapsed)};
}

Outcome zero_padded_exactness() {
  const int d = 6;
  double worst_p = 0.0, worst_m = 0.0;
  bool unique = true;
  for (int r = 1; r <= 3; ++r) {
    CVector h = CVector::Zero(d + 1);
    for (int k = 0; k < r; ++k) h(k) = Complex(1.0 + 0.5 * k, -0.25 * k);
    const auto s = hankel::hankel_structure(h);
    worst_p = std::max(worst_p, rx::minimize_nuclear_norm(s).p.norm());
    const auto c = rx::certificate(s, CVector::Zero(d));
    worst_m = std::max(worst_m, c.spectral_norm_m);
    unique = unique && c.unique;
  }
  return {worst_p < 1e-6 && worst_m < 1e-8 && unique,
          fmt("max |p| %.2e, max |M*| %.2e at p = 0, unique %s", worst_p, worst_m, unique ? "yes" : "no")};
}

Outcome fig2_region() {
  ex::ExperimentConfig cfg;
  cfg.grid = 21;
  cfg.workers = workers();
  const auto t0 = Clock::now();
  const auto out = ex::run_fig2(cfg);
  const double elapsed = seconds_since(t0);
  const auto& g = out.grid;
  const auto re = g.column("real"), im = g.column("imag"), dist = g.column("distance_frobenius");
  int inside = 0, failing = 0;
  for (const auto& row : g.rows) {
    if (std::hypot(row[re], row[im]) > 0.8 + 1e-12) continue;
    ++inside;
    failing += !(row[dist] < 1e-6);
  }
  const double limit = cfg.workers >= 8 ? 120.0 : 600.0;
  return {failing == 0 && elapsed < limit,
          fmt("%d of %d cells with |lambda| <= 0.8 fail, %.1f s on %d workers", failing, inside, elapsed,
              cfg.workers)};
}

Outcome vandermonde_factorization() {
  std::mt19937 gen(2024);
  std::uniform_int_distribution<int> md(1, 2), dd(0, 4), rd(1, 6);
  std::uniform_real_distribution<double> mag(0.2, 2.0), ang(0.0, 6.283185307179586);
  double worst = 0.0;
  int independent = 0, rank_ok = 0;
  for (int t = 0; t < 200; ++t) {
    const int m = md(gen), d = dd(gen), r = rd(gen);
    const auto c = triangle_set(m, d);
    const auto pts = random_points(gen, m, r, 1.0);
    std::vector<Complex> coeffs;
    for (int k = 0; k < r; ++k) coeffs.push_back(std::polar(mag(gen), ang(gen)));
    const CMatrix h = quasi_hankel(c, exp_array(c, pts, coeffs));
    const CMatrix v = oracle::vandermonde(c, pts);
    CVector cv(r);
    for (int k = 0; k < r; ++k) cv(k) = coeffs[static_cast<std::size_t>(k)];
    worst = std::max(worst, (h - v * cv.asDiagonal() * v.transpose()).norm() / h.norm());
    if (numerical_rank(v) == r) {
      ++independent;
      rank_ok += numerical_rank(h) == r;
    }
  }
  return {worst < 1e-10 && rank_ok == independent,
          fmt("max relative error %.2e, rank r on %d/%d independent instances", worst, rank_ok, independent)};
}

// Fixed corpus: random small Gaussian integers, sparse data, integer
// exponential sums and shifted Kronecker sequences.
std::vector<std::vector<std::pair<int, int>>> rank_corpus() {
  std::mt19937 gen(500);
  std::uniform_int_distribution<int> len(1, 7), small(-2, 2), unit(-1, 1), coin(0, 3), order(1, 3);
  std::vector<std::vector<std::pair<int, int>>> corpus;
  for (int t = 0; t < 500; ++t) {
    const int n = len(gen);
    std::vector<std::pair<int, int>> h(static_cast<std::size_t>(n), {0, 0});
    switch (t % 4) {
      case 0:
        for (auto& v : h) v = {small(gen), small(gen)};
        break;
      case 1:
        for (auto& v : h)
          if (coin(gen) == 0) v = {unit(gen), unit(gen)};
        break;
      case 2: {
        const int r = order(gen);
        for (int j = 0; j < r; ++j) {
          const std::complex<long> z(unit(gen), unit(gen) * (t % 3 != 0));
          const std::complex<long> c(small(gen), unit(gen));
          std::complex<long> p(1, 0);
          for (auto& v : h) {
            const auto term = c * p;
            v.first += static_cast<int>(term.real());
            v.second += static_cast<int>(term.imag());
            p *= z;
          }
        }
        break;
      }
      default: {
        const int head = std::min(n, order(gen));
        for (int k = 0; k < head; ++k) h[static_cast<std::size_t>(k)] = {small(gen), unit(gen)};
        if (coin(gen) == 0) h.back() = {1, 0};
      }
    }
    corpus.push_back(h);
  }
  return corpus;
}

Outcome hankel_rank_oracle() {
  int agree = 0, total = 0;
  std::string first_mismatch;
  for (const auto& raw : rank_corpus()) {
    CVector h(static_cast<Eigen::Index>(raw.size()));
    for (std::size_t k = 0; k < raw.size(); ++k) h(static_cast<Eigen::Index>(k)) = Complex(raw[k].first, raw[k].second);
    const int got = hankel::hankel_rank(h);
    const int want = oracle::max_known_block_rank(raw);
    ++total;
    if (got == want) {
      ++agree;
    } else if (first_mismatch.empty()) {
      std::ostringstream os;
      os << "; first mismatch: got " << got << ", oracle " << want << " for";
      for (const auto& v : raw) os << " (" << v.first << "," << v.second << ")";
      first_mismatch = os.str();
    }
  }
  return {agree == total, fmt("%d/%d agree", agree, total) + first_mismatch};
}

Outcome projector_limit_convergence() {
  std::mt19937 gen(31);
  const auto rows = rx::projector_limit_check(triangle_set(2, 3), random_points(gen, 2, 3, 0.5),
                                              {1e-1, 1e-2, 1e-3, 1e-4});
  bool monotone = true;
  std::string trail;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) monotone = monotone && rows[i].distance < rows[i - 1].distance;
    trail += fmt("%s%.1e", i ? ", " : "", rows[i].distance);
  }
  return {monotone && rows.back().distance < 1e-3, "distances " + trail};
}

Outcome fig5_radius() {
  ex::ExperimentConfig cfg;
  cfg.grid = 20;
  cfg.trials = 10;
  cfg.threshold = 1e-5;
  cfg.workers = workers();
  const auto out = ex::run_fig5(cfg);
  bool all = true;
  std::string list;
  for (const auto& r : out.meta["rho0"]) {
    const double v = r.get<double>();
    all = all && v >= 0.05;
    list += fmt("%s%.2f", list.empty() ? "" : " ", v);
  }
  return {all && out.meta["rho0"].size() == 10, "rho0 per realization: " + list};
}

Outcome nonunique_counts() {
  ex::NonUniqueConfig cfg;
  cfg.workers = workers();
  cfg.scenario = ex::Scenario::IdentityA;
  const auto id = ex::run_nonunique(cfg);
  cfg.scenario = ex::Scenario::DenseA;
  const auto dense = ex::run_nonunique(cfg);
  return {id.successes >= 55 && id.successes <= 95 && dense.successes <= 5,
          fmt("identity-A %d/100, dense-A %d/100", id.successes, dense.successes)};
}

Outcome certificate_brute_force() {
  std::mt19937 gen(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::unique_ptr<QuasiHankelStructure> s;
    CVector p;
    if (t % 2 == 0) {
      const int d = 1 + t / 2 % 5;
      const int r = 1 + t / 2 % ((d + 1) / 2 + 1);
      CVector full = CVector::Zero(2 * d + 1);
      for (int j = 0; j < r; ++j) full += Complex(u(gen), u(gen)) * geometric(std::polar(0.3 + 0.6 * std::abs(u(gen)), 3.2 * u(gen)), 2 * d + 1);
      s = std::make_unique<QuasiHankelStructure>(hankel::hankel_structure(full.head(d + 1)));
      p = full.tail(d);
    } else {
      const int d = t % 4 == 1 ? 1 : 2;
      quasihankel::CanonicalProblem prob{2, d, random_points(gen, 2, 1 + t % 3, 0.7), {}};
      for (std::size_t k = 0; k < prob.points.size(); ++k) prob.coeffs.emplace_back(1.0 + 0.5 * u(gen), u(gen));
      const auto a = triangle_set(2, d);
      const auto full = exp_array(a, prob.points, prob.coeffs);
      s = std::make_unique<QuasiHankelStructure>(a, full.restricted_to(a));
      p = s->parameters_from(full);
    }
    if (t % 5 == 4) p += oracle::random_complex(gen, p.size(), 1, 0.1);
    const auto c = rx::certificate(*s, p);
    worst = std::max(worst, std::abs(c.residual - oracle::direct_residual(*s, c.b, c.q, c.m_star)));
  }
  return {worst <= 1e-12, fmt("max |operator - direct| %.2e over 100 instances", worst)};
}

Outcome projector_identity() {
  std::mt19937 gen(10);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index n = 2 + t % 9;
    const Eigen::Index s = 1 + t % n;
    const CMatrix u = oracle::random_orthonormal(gen, n, s);
    const CMatrix v = oracle::random_orthonormal(gen, n, s);
    const CMatrix p = u * u.adjoint(), p0 = v * v.adjoint();
    const auto d = rx::projector_distance(p, p0);
    const double direct = (p - p0).squaredNorm();
    const double identity = 2.0 * ((CMatrix::Identity(n, n) - p0) * u).squaredNorm();
    worst = std::max({worst, std::abs(direct - identity), std::abs(d.squared - d.identity_value),
                      std::abs(d.squared - direct)});
  }
  return {worst <= 1e-12, fmt("max deviation %.2e over 100 pairs", worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"rank-one recovery, n = 6", rank_one_recovery},
      {"zero-padded sequences, d = 6", zero_padded_exactness},
      {"21x21 lambda grid, |lambda| <= 0.8", fig2_region},
      {"Vandermonde factorization, 200 instances", vandermonde_factorization},
      {"Hankel rank vs exact oracle, 500 sequences", hankel_rank_oracle},
      {"projector limit, m = 2, d = 3, r = 3", projector_limit_convergence},
      {"quasi-Hankel recovery radius, 10 realizations", fig5_radius},
      {"non-unique tensor completion", nonunique_counts},
      {"certificate residual vs direct sums", certificate_brute_force},
      {"projector distance identity, 100 pairs", projector_identity},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
