#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "starspec/cli.hpp"
#include "starspec/error.hpp"

namespace starspec::cli {

using nlohmann::json;

StarlikeShape parse_shape(std::string_view text) {
  const auto fail = [&text](const std::string& why) {
    return Error(Errc::kParse, "bad shape \"" + std::string(text) + "\": " + why);
  };
  const auto semicolon = text.find(';');
  if (semicolon == std::string_view::npos) throw fail("expected \"s;n1,...,ns\"");

  const auto parse_int = [&fail](std::string_view field) {
    const auto first = field.find_first_not_of(" \t");
    const auto last = field.find_last_not_of(" \t");
    if (first == std::string_view::npos) throw fail("empty field");
    const std::string digits(field.substr(first, last - first + 1));
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6) {
      throw fail("\"" + digits + "\" is not a small non-negative integer");
    }
    return std::stoi(digits);
  };

  const int declared = parse_int(text.substr(0, semicolon));
  std::vector<int> branches;
  std::string_view rest = text.substr(semicolon + 1);
  if (rest.find_first_not_of(" \t") != std::string_view::npos) {
    while (true) {
      const auto comma = rest.find(',');
      branches.push_back(parse_int(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  if (static_cast<int>(branches.size()) != declared) {
    throw fail("declares " + std::to_string(declared) + " branches but lists " +
               std::to_string(branches.size()));
  }
  for (int n : branches) {
    if (n < 1) throw fail("branch lengths must be positive");
  }
  return StarlikeShape(std::move(branches));
}

double round_sig15(double value) {
  if (value == 0.0 || !std::isfinite(value)) return value == 0.0 ? 0.0 : value;
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.15g", value);
  const double rounded = std::strtod(buffer, nullptr);
  return rounded == 0.0 ? 0.0 : rounded;
}

std::string dump(const json& record) { return record.dump(); }

namespace {

json entries_json(const Spectrum& spectrum) {
  json entries = json::array();
  for (const auto& e : spectrum.entries) {
    entries.push_back(json::array({round_sig15(e.eigenvalue), e.multiplicity}));
  }
  return entries;
}

}  // namespace

json spectrum_record(const StarlikeShape& shape, const Spectrum& spectrum) {
  return {
      {"shape", shape.to_string()},
      {"vertex_count", shape.vertex_count()},
      {"entries", entries_json(spectrum)},
  };
}

json index_record(const StarlikeShape& shape, double index) {
  return {
      {"shape", shape.to_string()},
      {"index", round_sig15(index)},
      {"t_max", round_sig15(index * index)},
  };
}

json eigvec_record(const StarlikeShape& shape, const PrincipalEigenvector& y, double residual) {
  json branches = json::array();
  for (const auto& branch : y.branches) {
    json components = json::array();
    for (double c : branch) components.push_back(round_sig15(c));
    branches.push_back(std::move(components));
  }
  return {
      {"shape", shape.to_string()},
      {"index", round_sig15(y.index)},
      {"t", round_sig15(y.t)},
      {"y0", round_sig15(y.root)},
      {"branches", std::move(branches)},
      {"residual", round_sig15(residual)},
  };
}

json integral_record(const StarlikeShape& shape, const IntegralityVerdict& verdict,
                     const Classification& classification) {
  json record = {
      {"shape", shape.to_string()},
      {"integral", verdict.is_integral},
      {"family", class_name(classification.kind)},
  };
  if (classification.kind == IntegralClass::kStar ||
      classification.kind == IntegralClass::kTwoSpider) {
    record["t"] = classification.t;
  }
  if (verdict.is_integral) {
    json spectrum = json::array();
    for (const auto& [value, multiplicity] : verdict.integer_spectrum) {
      spectrum.push_back(json::array({value, multiplicity}));
    }
    record["spectrum"] = std::move(spectrum);
  } else if (verdict.non_integer_eigenvalue) {
    record["witness"] = {
        {"eigenvalue", round_sig15(*verdict.non_integer_eigenvalue)},
        {"floor", verdict.gap_floor},
        {"ceil", verdict.gap_ceil},
    };
  }
  return record;
}

}  // namespace starspec::cli
