#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "starspec/integrality.hpp"
#include "starspec/shape.hpp"
#include "starspec/spectral.hpp"
#include "starspec/spectrum.hpp"

namespace starspec::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kRootAccounting = 2,
  kCrossCheck = 3,
};

/// Parses "s;n1,...,ns" (e.g. "3;1,2,5", or "0;" for the single vertex).
/// The declared s must match the number of listed lengths.
StarlikeShape parse_shape(std::string_view text);

/// Rounds to 15 significant digits; -0 becomes 0.
double round_sig15(double value);

/// Compact JSON with sorted keys, as written by every command.
std::string dump(const nlohmann::json& record);

nlohmann::json spectrum_record(const StarlikeShape& shape, const Spectrum& spectrum);
nlohmann::json index_record(const StarlikeShape& shape, double index);
nlohmann::json eigvec_record(const StarlikeShape& shape, const PrincipalEigenvector& y,
                             double residual);
nlohmann::json integral_record(const StarlikeShape& shape, const IntegralityVerdict& verdict,
                               const Classification& classification);

struct PropertyResult {
  std::string name;
  int checked = 0;
  int failure_count = 0;
  /// The first few failure messages.
  std::vector<std::string> failures;

  bool passed() const { return failure_count == 0; }
};

/// Oracle equivalence and invariant suites over the single vertex and every
/// shape with branch sum <= budget.
std::vector<PropertyResult> run_selfcheck(int budget);

/// Entry point shared by the starspec binary and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starspec::cli
