#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "slrc/errors.hpp"
#include "slrc/structure.hpp"

namespace slrc {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ls(line);
  while (std::getline(ls, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

void write_coefficient_csv(std::ostream& os, const CoefficientArray& h) {
  const int m = h.dimension();
  for (int l = 1; l <= m; ++l) os << "alpha_" << l << ',';
  os << "re,im\n";
  char buf[64];
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& a = h.domain()[i];
    for (int l = 0; l < m; ++l) os << a[l] << ',';
    const Complex v = h.values()[i];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", v.real(), v.imag());
    os << buf << '\n';
  }
}

CoefficientArray read_coefficient_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw InvalidInput("coefficient CSV is empty");
  const auto header = split_csv_line(line);
  if (header.size() < 3 || header[header.size() - 2] != "re" || header.back() != "im")
    throw InvalidInput("coefficient CSV header must end with re,im");
  const int m = static_cast<int>(header.size()) - 2;
  std::vector<MultiIndex> indices;
  std::vector<std::pair<MultiIndex, Complex>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (static_cast<int>(f.size()) != m + 2) throw InvalidInput("malformed coefficient CSV row: " + line);
    std::vector<int> e(static_cast<std::size_t>(m));
    for (int l = 0; l < m; ++l) e[static_cast<std::size_t>(l)] = std::stoi(f[static_cast<std::size_t>(l)]);
    MultiIndex a(std::move(e));
    indices.push_back(a);
    rows.emplace_back(a, Complex(std::stod(f[static_cast<std::size_t>(m)]),
                                 std::stod(f[static_cast<std::size_t>(m + 1)])));
  }
  IndexSet domain(m, indices);
  if (domain.size() != rows.size()) throw InvalidInput("coefficient CSV repeats an index");
  CoefficientArray h(domain);
  for (const auto& [a, v] : rows) h.set(a, v);
  return h;
}

}  // namespace slrc
