#pragma once

#include <string>
#include <vector>

namespace starspec {

struct SpectrumEntry {
  double eigenvalue = 0.0;
  int multiplicity = 0;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Adjacency eigenvalues with multiplicities, sorted by decreasing eigenvalue.
struct Spectrum {
  int vertex_count = 0;
  std::vector<SpectrumEntry> entries;

  int total_multiplicity() const;
  double index() const { return entries.empty() ? 0.0 : entries.front().eigenvalue; }
  /// Sum of multiplicity * eigenvalue^2 (the trace of A^2).
  double sum_of_squares() const;
  /// Multiplicity of the entry within tol of value, 0 if absent.
  int multiplicity_of(double value, double tol) const;
};

/// Pairs entries in order; true when the entry counts agree, each pair of
/// eigenvalues is within tol and multiplicities are equal.
bool spectra_match(const Spectrum& a, const Spectrum& b, double tol);

/// Empty when every invariant holds: multiplicities sum to the vertex count,
/// the multiset is symmetric under negation, the trace of A^2 equals
/// 2(N - 1) within 1e-8 N, and the largest eigenvalue is simple.
std::vector<std::string> spectrum_violations(const Spectrum& spectrum);

}  // namespace starspec
