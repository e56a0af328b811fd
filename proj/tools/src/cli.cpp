#include "starspec/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "starspec/error.hpp"
#include "starspec/oracle.hpp"
#include "starspec/separating_function.hpp"

namespace starspec::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string shape;
  std::string edges;
  std::string emit_charpoly;
  std::string format = "json";
  std::string mode = "float";
  double tol = kDefaultRootTolerance;
};

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.15g", round_sig15(value));
  return buffer;
}

std::string quoted(const StarlikeShape& shape) { return "\"" + shape.to_string() + "\""; }

class Runner {
 public:
  Runner(const Options& options, std::ostream& out) : options_(options), out_(out) {}

  bool csv() const { return options_.format == "csv"; }
  bool exact() const { return options_.mode == "exact"; }

  StarlikeShape shape() const {
    StarlikeShape shape;
    if (!options_.edges.empty()) {
      if (!options_.shape.empty()) {
        throw Error(Errc::kParse, "give either a shape string or --edges, not both");
      }
      std::ifstream in(options_.edges);
      if (!in) throw Error(Errc::kParse, "cannot open edge list " + options_.edges);
      shape = shape_from_edge_list(read_edge_list(in));
    } else if (!options_.shape.empty()) {
      shape = parse_shape(options_.shape);
    } else {
      throw Error(Errc::kParse, "a shape string or --edges is required");
    }
    if (!options_.emit_charpoly.empty()) {
      std::ofstream poly_out(options_.emit_charpoly);
      if (!poly_out) throw Error(Errc::kParse, "cannot write " + options_.emit_charpoly);
      write_coefficients(poly_out, char_poly(shape));
    }
    return shape;
  }

  void emit(const std::string& command, json record) {
    record["command"] = command;
    out_ << dump(record) << '\n';
  }

  int spectrum() {
    const auto s = shape();
    const Spectrum spectrum = exact() ? oracle_spectrum(s) : full_spectrum(s, options_.tol);
    if (csv()) {
      for (const auto& e : spectrum.entries) {
        out_ << format_number(e.eigenvalue) << ',' << e.multiplicity << '\n';
      }
    } else {
      emit("spectrum", spectrum_record(s, spectrum));
    }
    return kOk;
  }

  int index() {
    const auto s = shape();
    const double r = exact() ? oracle_spectrum(s).index() : spectral_index(s, options_.tol);
    if (csv()) {
      out_ << format_number(r) << ',' << format_number(r * r) << '\n';
    } else {
      emit("index", index_record(s, r));
    }
    return kOk;
  }

  int eigvec() {
    if (exact()) throw Error(Errc::kParse, "eigvec is only available in float mode");
    const auto s = shape();
    if (s.is_single_vertex()) {
      throw Error(Errc::kParse, "the single vertex has no branches to report");
    }
    const auto y = principal_eigenvector(s, options_.tol);
    const auto flat = y.flatten();
    const double residual = verify_eigenpair(s, y.index, flat);
    const double largest = *std::max_element(flat.begin(), flat.end());
    if (csv()) {
      out_ << "0,0," << format_number(y.root) << '\n';
      for (std::size_t k = 0; k < y.branches.size(); ++k) {
        for (std::size_t m = 0; m < y.branches[k].size(); ++m) {
          out_ << k + 1 << ',' << m + 1 << ',' << format_number(y.branches[k][m]) << '\n';
        }
      }
    } else {
      emit("eigvec", eigvec_record(s, y, residual));
    }
    if (residual > 1e-9 * largest) {
      throw Error(Errc::kRootCountMismatch, "eigen-residual " + format_number(residual) +
                                                " exceeds 1e-9 of the largest component");
    }
    return kOk;
  }

  int integral() {
    const auto s = shape();
    const auto verdict = is_integral(s);
    const auto classification = classify_integral(s);
    if (csv()) {
      out_ << quoted(s) << ',' << (verdict.is_integral ? "true" : "false") << ','
           << class_name(classification.kind) << '\n';
    } else {
      emit("integral", integral_record(s, verdict, classification));
    }
    const bool classified = classification.kind != IntegralClass::kNotIntegral;
    if (classified != verdict.is_integral) {
      throw Error(Errc::kCrossCheckMismatch,
                  "closed-form classification disagrees with exact certification");
    }
    return kOk;
  }

  int enumerate(int max_vertices) {
    const auto shapes = enumerate_integral(max_vertices);
    if (csv()) {
      for (const auto& s : shapes) out_ << quoted(s) << '\n';
      return kOk;
    }
    json list = json::array();
    for (const auto& s : shapes) list.push_back(s.to_string());
    emit("enumerate", {{"max_vertices", max_vertices},
                       {"count", shapes.size()},
                       {"shapes", std::move(list)}});
    return kOk;
  }

  int verify_prop1(int t, int n_cap) {
    const auto solutions = verify_integral_vectors(t, n_cap);
    const auto families = family_vectors(t);
    std::vector<StarlikeShape> expected;
    for (const auto& f : families) {
      if (f.branch(1) <= n_cap) expected.push_back(f);
    }
    std::sort(expected.begin(), expected.end());
    const bool matches = expected == solutions;
    if (csv()) {
      for (const auto& s : solutions) out_ << quoted(s) << '\n';
    } else {
      json found = json::array();
      for (const auto& s : solutions) found.push_back(s.to_string());
      json listed = json::object();
      for (std::size_t i = 0; i < families.size(); ++i) {
        listed[family_name(static_cast<IntegralVectorFamily>(i))] = families[i].to_string();
      }
      emit("verify-prop1", {{"t", t},
                            {"n_cap", n_cap},
                            {"solutions", std::move(found)},
                            {"families", std::move(listed)},
                            {"matches", matches}});
    }
    if (!matches) {
      throw Error(Errc::kCrossCheckMismatch, "exhaustive search disagrees with the four families");
    }
    return kOk;
  }

  int rho(const std::string& t_text) {
    const auto s = shape();
    json record = {{"shape", s.to_string()}, {"mode", options_.mode}};
    if (exact()) {
      const Rational t = parse_rational(t_text);
      const auto value = rho_sum(t, s);
      record["t"] = t.str();
      record["infinite"] = value.is_infinite();
      if (value.is_finite()) record["value"] = value.value().str();
      if (csv()) {
        out_ << t.str() << ',' << (value.is_finite() ? value.value().str() : "inf") << '\n';
        return kOk;
      }
    } else {
      const double t = parse_double(t_text);
      const auto value = rho_sum(t, s);
      record["t"] = round_sig15(t);
      record["infinite"] = value.is_infinite();
      if (value.is_finite()) record["value"] = round_sig15(value.value());
      if (csv()) {
        out_ << format_number(t) << ','
             << (value.is_finite() ? format_number(value.value()) : "inf") << '\n';
        return kOk;
      }
    }
    emit("rho", std::move(record));
    return kOk;
  }

  int selfcheck(int budget) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = run_selfcheck(budget);
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start);
    const bool passed =
        std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
    if (csv()) {
      for (const auto& r : results) {
        out_ << r.name << ',' << r.checked << ',' << r.failure_count << '\n';
      }
    } else {
      json properties = json::array();
      for (const auto& r : results) {
        properties.push_back({{"name", r.name},
                              {"checked", r.checked},
                              {"failures", r.failure_count},
                              {"passed", r.passed()},
                              {"examples", r.failures}});
      }
      emit("selfcheck", {{"budget", budget},
                         {"shapes", all_shapes(budget).size() + 1},
                         {"passed", passed},
                         {"properties", std::move(properties)},
                         {"elapsed_ms", std::round(elapsed.count())}});
    }
    return passed ? kOk : kCrossCheck;
  }

 private:
  static double parse_double(const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || used == 0) throw Error(Errc::kParse, "bad number: " + text);
    return value;
  }

  // Accepts "p", "p/q" and plain decimals such as "2.5".
  static Rational parse_rational(const std::string& text) {
    try {
      const auto dot = text.find('.');
      if (dot == std::string::npos) return Rational(text);
      const std::string fraction = text.substr(dot + 1);
      if (fraction.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument(text);
      }
      BigInt scale = 1;
      for (std::size_t i = 0; i < fraction.size(); ++i) scale *= 10;
      return Rational(BigInt(text.substr(0, dot) + fraction), scale);
    } catch (const std::exception&) {
      throw Error(Errc::kParse, "bad rational: " + text);
    }
  }

  const Options& options_;
  std::ostream& out_;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::kRootCountMismatch: return kRootAccounting;
    case Errc::kCrossCheckMismatch: return kCrossCheck;
    default: return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra, indices and principal eigenvectors of starlike trees", "starspec"};
  app.require_subcommand(1);

  Options options;
  int count_arg = 0;
  int n_cap = 12;
  int budget = 12;
  std::string t_text;

  const auto add_common = [&options](CLI::App* sub, bool takes_shape) {
    if (takes_shape) {
      sub->add_option("shape", options.shape, "Shape as \"s;n1,...,ns\"");
      sub->add_option("--edges", options.edges, "Read the graph from an edge-list file");
      sub->add_option("--emit-charpoly", options.emit_charpoly,
                      "Write characteristic polynomial coefficients, lowest degree first");
    }
    sub->add_option("--tol", options.tol, "Root refinement tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--mode", options.mode, "Arithmetic: exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
  };

  auto* spectrum = app.add_subcommand("spectrum", "Full spectrum with multiplicities");
  add_common(spectrum, true);
  auto* index = app.add_subcommand("index", "Largest eigenvalue and t_max");
  add_common(index, true);
  auto* eigvec = app.add_subcommand("eigvec", "Principal eigenvector in closed form");
  add_common(eigvec, true);
  auto* integral = app.add_subcommand("integral", "Integrality verdict and classification");
  add_common(integral, true);
  auto* rho = app.add_subcommand("rho", "Evaluate rho_t(n1, ..., ns)");
  rho->add_option("t", t_text, "Argument t > 0 (p/q allowed in exact mode)")->required();
  add_common(rho, true);
  auto* enumerate = app.add_subcommand("enumerate", "Integral starlike graphs up to N vertices");
  enumerate->add_option("max_vertices", count_arg, "Largest vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(enumerate, false);
  auto* verify = app.add_subcommand("verify-prop1", "Exhaustive integral branch vectors for t");
  verify->add_option("t", count_arg, "Integer t >= 4")->required();
  verify->add_option("--cap", n_cap, "Largest branch length searched")
      ->check(CLI::PositiveNumber);
  add_common(verify, false);
  auto* selfcheck = app.add_subcommand("selfcheck", "Oracle equivalence and invariant suites");
  selfcheck->add_option("budget", budget, "Largest branch sum checked")
      ->check(CLI::NonNegativeNumber);
  add_common(selfcheck, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "starspec: " << e.what() << '\n';
    return kInputError;
  }

  Runner runner(options, out);
  try {
    if (*spectrum) return runner.spectrum();
    if (*index) return runner.index();
    if (*eigvec) return runner.eigvec();
    if (*integral) return runner.integral();
    if (*rho) return runner.rho(t_text);
    if (*enumerate) return runner.enumerate(count_arg);
    if (*verify) return runner.verify_prop1(count_arg, n_cap);
    if (*selfcheck) return runner.selfcheck(budget);
  } catch (const Error& e) {
    err << "starspec: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "starspec: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace starspec::cli
