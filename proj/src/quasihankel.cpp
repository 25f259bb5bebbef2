#include "slrc/quasihankel.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "slrc/errors.hpp"
#include "slrc/linalg.hpp"

namespace slrc::quasihankel {

namespace {

int rank_on(const IndexSet& b, const CoefficientArray& h, double tol) {
  if (b.empty()) return 0;
  return numerical_rank(quasi_hankel(b, h), tol);
}

void validate(const CanonicalProblem& problem) {
  if (problem.m < 1) throw InvalidInput("dimension m must be at least 1");
  if (problem.d < 0) throw InvalidInput("degree d must be nonnegative");
  if (problem.points.size() != problem.coeffs.size())
    throw InvalidInput("number of points and coefficients differ");
  for (const auto& z : problem.points)
    if (z.size() != problem.m) throw DimensionMismatch("point dimension differs from m");
  for (const auto& c : problem.coeffs)
    if (c == Complex(0.0, 0.0)) throw InvalidInput("coefficients must be nonzero");
}

}  // namespace

FlatExtensionResult flat_extension_rank(const IndexSet& a, const CoefficientArray& h, double tol) {
  if (a.empty()) throw InvalidInput("index set must be nonempty");
  if (a.dimension() != h.dimension()) throw DimensionMismatch("index set and array dimensions differ");
  const int m = a.dimension();
  const int half = a.max_degree() / 2;
  const IndexSet b_plus = triangle_set(m, half);
  for (const auto& alpha : minkowski_sum(b_plus, b_plus))
    if (!h.defined_at(alpha))
      throw InvalidInput("array does not cover 2(B+) at " + alpha.to_string());
  const IndexSet b = half >= 1 ? triangle_set(m, half - 1) : IndexSet(m);
  FlatExtensionResult out;
  out.rank_b = rank_on(b, h, tol);
  out.rank_b_plus = rank_on(b_plus, h, tol);
  out.flat = out.rank_b == out.rank_b_plus;
  return out;
}

CoefficientArray known_values(const CanonicalProblem& problem) {
  validate(problem);
  return exp_array_on(triangle_set(problem.m, problem.d), problem.points, problem.coeffs);
}

CanonicalCompletion canonical_completion(const CanonicalProblem& problem, double tol) {
  validate(problem);
  const int half = problem.d / 2;
  const IndexSet a = triangle_set(problem.m, problem.d);
  if (!is_independent(triangle_set(problem.m, half), problem.points, tol))
    throw HypothesisViolated("points are not T(m, floor(d/2))-independent");

  CanonicalCompletion out{exp_array(a, problem.points, problem.coeffs), 0, false};
  out.rank = numerical_rank(quasi_hankel(a, out.array), tol);
  if (missing_indices(a).empty() || problem.d % 2 == 1) {
    out.unique = true;
  } else {
    const IndexSet lower = half >= 1 ? triangle_set(problem.m, half - 1) : IndexSet(problem.m);
    out.unique = is_independent(lower, problem.points, tol);
  }
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long generic_rank_bound(int m, int d, bool strict) {
  if (m < 1 || d < 0) throw InvalidInput("need m >= 1 and d >= 0");
  const int half = d / 2;
  return strict ? binomial(half + m - 1, m) : binomial(half + m, m);
}

void write_problem_csv(std::ostream& os, const CanonicalProblem& problem) {
  validate(problem);
  for (int l = 1; l <= problem.m; ++l) os << 'z' << l << "_re,z" << l << "_im,";
  os << "c_re,c_im\n";
  char buf[64];
  for (std::size_t k = 0; k < problem.points.size(); ++k) {
    for (int l = 0; l < problem.m; ++l) {
      const Complex z = problem.points[k](l);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,", z.real(), z.imag());
      os << buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", problem.coeffs[k].real(), problem.coeffs[k].imag());
    os << buf << '\n';
  }
}

CanonicalProblem read_problem_csv(std::istream& is, int d) {
  std::string line;
  if (!std::getline(is, line)) throw InvalidInput("problem CSV is empty");
  std::size_t columns = 1;
  for (char ch : line) columns += ch == ',' ? 1 : 0;
  if (columns < 4 || columns % 2 != 0) throw InvalidInput("malformed problem CSV header");
  CanonicalProblem problem;
  problem.m = static_cast<int>(columns / 2) - 1;
  problem.d = d;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    std::vector<double> v;
    while (std::getline(ls, field, ',')) v.push_back(std::stod(field));
    if (v.size() != columns) throw InvalidInput("malformed problem CSV row: " + line);
    Point z(problem.m);
    for (int l = 0; l < problem.m; ++l)
      z(l) = Complex(v[static_cast<std::size_t>(2 * l)], v[static_cast<std::size_t>(2 * l + 1)]);
    problem.points.push_back(z);
    problem.coeffs.emplace_back(v[columns - 2], v[columns - 1]);
  }
  validate(problem);
  return problem;
}

}  // namespace slrc::quasihankel
