#include "starspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace starspec {

int Spectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

double Spectrum::sum_of_squares() const {
  double total = 0.0;
  for (const auto& e : entries) total += e.multiplicity * e.eigenvalue * e.eigenvalue;
  return total;
}

int Spectrum::multiplicity_of(double value, double tol) const {
  for (const auto& e : entries) {
    if (std::abs(e.eigenvalue - value) <= tol) return e.multiplicity;
  }
  return 0;
}

bool spectra_match(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.vertex_count != b.vertex_count || a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].multiplicity != b.entries[i].multiplicity) return false;
    if (!(std::abs(a.entries[i].eigenvalue - b.entries[i].eigenvalue) <= tol)) return false;
  }
  return true;
}

std::vector<std::string> spectrum_violations(const Spectrum& spectrum) {
  std::vector<std::string> problems;
  const int n = spectrum.vertex_count;
  if (spectrum.total_multiplicity() != n) {
    problems.push_back("multiplicities sum to " + std::to_string(spectrum.total_multiplicity()) +
                       ", expected " + std::to_string(n));
  }
  const auto& entries = spectrum.entries;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& mirror = entries[entries.size() - 1 - i];
    if (entries[i].multiplicity != mirror.multiplicity ||
        std::abs(entries[i].eigenvalue + mirror.eigenvalue) > 1e-8) {
      problems.push_back("spectrum is not symmetric under negation");
      break;
    }
    if (i > 0 && !(entries[i].eigenvalue < entries[i - 1].eigenvalue)) {
      problems.push_back("entries are not strictly decreasing");
      break;
    }
  }
  const double expected = 2.0 * (n - 1);
  if (std::abs(spectrum.sum_of_squares() - expected) > 1e-8 * std::max(n, 1)) {
    problems.push_back("trace of A^2 is " + std::to_string(spectrum.sum_of_squares()) +
                       ", expected " + std::to_string(expected));
  }
  if (!entries.empty() && entries.front().multiplicity != 1) {
    problems.push_back("largest eigenvalue is not simple");
  }
  return problems;
}

}  // namespace starspec
