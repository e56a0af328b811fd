#include "starspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>

#include "starspec/error.hpp"
#include "starspec/separating_function.hpp"

namespace starspec {
namespace {

constexpr double kPoleExclusion = 1e-9;
constexpr int kInitialGrid = 64;
constexpr int kMaxGrid = 1 << 16;
constexpr int kMaxBisections = 200;

struct SharedPole {
  double t = 0.0;
  std::vector<int> branches;
};

// Poles of every summand, keyed by exact angle, with the branches hitting each.
std::vector<SharedPole> collect_poles(const StarlikeShape& shape) {
  std::map<std::pair<int, int>, SharedPole> by_angle;
  std::map<int, std::vector<BranchPole>> cache;
  for (int k = 1; k <= shape.branch_count(); ++k) {
    const int n = shape.branch(k);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, branch_pole_set(n)).first;
    for (const auto& pole : it->second) {
      auto& shared = by_angle[pole.angle()];
      shared.t = pole.t;
      shared.branches.push_back(k);
    }
  }
  std::vector<SharedPole> poles;
  for (auto& [angle, pole] : by_angle) poles.push_back(std::move(pole));
  std::sort(poles.begin(), poles.end(),
            [](const SharedPole& a, const SharedPole& b) { return a.t < b.t; });
  return poles;
}

// rho_t(n_1, ..., n_s) - t, or nullopt where the float recurrence hits a pole.
std::optional<double> residual(const StarlikeShape& shape, double t) {
  const auto sum = rho_sum(t, shape);
  if (sum.is_infinite()) return std::nullopt;
  return sum.value() - t;
}

int sign_of(double v) { return (v > 0) - (v < 0); }

struct Bracket {
  double lo;
  double hi;
  bool exact;  // lo is itself a zero of the residual
};

std::vector<Bracket> scan(const StarlikeShape& shape, double lo, double hi, int grid) {
  std::vector<Bracket> brackets;
  double previous_t = 0.0;
  int previous_sign = 0;
  for (int i = 0; i <= grid; ++i) {
    const double t = i == grid ? hi : lo + (hi - lo) * i / grid;
    const auto value = residual(shape, t);
    if (!value) continue;
    const int s = sign_of(*value);
    if (s == 0) {
      brackets.push_back({t, t, true});
      previous_sign = 0;
      continue;
    }
    if (previous_sign != 0 && s != previous_sign) {
      brackets.push_back({previous_t, t, false});
    }
    previous_t = t;
    previous_sign = s;
  }
  return brackets;
}

double bisect(const StarlikeShape& shape, double lo, double hi, double tol) {
  auto f_lo = residual(shape, lo);
  auto f_hi = residual(shape, hi);
  if (!f_lo || !f_hi) return 0.5 * (lo + hi);
  const int sign_hi = sign_of(*f_hi);
  for (int i = 0; i < kMaxBisections; ++i) {
    if (hi - lo <= tol * std::min(1.0, std::sqrt(lo))) break;
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    const auto value = residual(shape, mid);
    if (!value) break;
    const int s = sign_of(*value);
    if (s == 0) return mid;
    if (s == sign_hi) {
      hi = mid;
      f_hi = value;
    } else {
      lo = mid;
      f_lo = value;
    }
  }
  // The residual is smooth inside the bracket; one interpolation step takes
  // the tol-wide bracket down to rounding level.
  const double denominator = *f_hi - *f_lo;
  if (denominator == 0.0) return 0.5 * (lo + hi);
  const double interpolated = lo - *f_lo * (hi - lo) / denominator;
  return std::clamp(interpolated, lo, hi);
}

std::vector<double> find_roots(const StarlikeShape& shape, double tol, int initial_grid) {
  std::vector<double> roots;
  if (shape.is_single_vertex()) return roots;
  const auto poles = collect_poles(shape);
  const double ceiling = 2.0 * shape.edge_count() + 1.0;

  std::vector<double> edges{0.0};
  for (const auto& pole : poles) edges.push_back(pole.t);
  edges.push_back(ceiling);

  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i] + kPoleExclusion;
    const bool last = i + 2 == edges.size();
    const double hi = last ? edges[i + 1] : edges[i + 1] - kPoleExclusion;
    if (!(hi > lo)) continue;

    int grid = initial_grid;
    auto brackets = scan(shape, lo, hi, grid);
    int stable = 0;
    while (stable < 2 && grid < kMaxGrid) {
      grid *= 2;
      auto refined = scan(shape, lo, hi, grid);
      stable = refined.size() == brackets.size() ? stable + 1 : 0;
      brackets = std::move(refined);
    }
    for (const auto& b : brackets) {
      roots.push_back(b.exact ? b.lo : bisect(shape, b.lo, b.hi, tol));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<PositiveEigenvalue> assemble(const StarlikeShape& shape,
                                         const std::vector<double>& roots) {
  std::vector<PositiveEigenvalue> out;
  for (double t : roots) out.push_back({t, 1, EigenKind::kNonDegenerate, {}});
  for (auto& e : degenerate_eigenvalues(shape)) out.push_back(std::move(e));
  std::sort(out.begin(), out.end(),
            [](const PositiveEigenvalue& a, const PositiveEigenvalue& b) { return a.t > b.t; });
  return out;
}

// Empty when the positive part is consistent with N and the edge count.
std::string accounting_error(const StarlikeShape& shape,
                             const std::vector<PositiveEigenvalue>& positive) {
  const int n = shape.vertex_count();
  int count = 0;
  double squares = 0.0;
  for (const auto& e : positive) {
    count += e.multiplicity;
    squares += 2.0 * e.multiplicity * e.t;
  }
  if (n - 2 * count < 0) {
    return std::to_string(count) + " positive eigenvalues exceed half of " +
           std::to_string(n) + " vertices";
  }
  const double expected = 2.0 * shape.edge_count();
  if (std::abs(squares - expected) > 1e-8 * n) {
    return "trace of A^2 is " + std::to_string(squares) + ", expected " +
           std::to_string(expected);
  }
  return {};
}

std::vector<PositiveEigenvalue> checked_positive(const StarlikeShape& shape, double tol) {
  std::string problem;
  // A coarse grid can in principle step over a pair of close roots; retry
  // finer before giving up.
  for (int grid = kInitialGrid; grid <= kInitialGrid * 64; grid *= 8) {
    auto positive = assemble(shape, find_roots(shape, tol, grid));
    problem = accounting_error(shape, positive);
    if (problem.empty()) return positive;
  }
  throw Error(Errc::kRootCountMismatch, shape.to_string() + ": " + problem);
}

}  // namespace

double PositiveEigenvalue::lambda() const { return std::sqrt(t); }

std::vector<double> nondegenerate_roots(const StarlikeShape& shape, double tol) {
  return find_roots(shape, tol, kInitialGrid);
}

std::vector<PositiveEigenvalue> degenerate_eigenvalues(const StarlikeShape& shape) {
  std::vector<PositiveEigenvalue> out;
  for (auto& pole : collect_poles(shape)) {
    if (pole.branches.size() < 2) continue;
    out.push_back({pole.t, static_cast<int>(pole.branches.size()) - 1, EigenKind::kDegenerate,
                   std::move(pole.branches)});
  }
  return out;
}

std::vector<PositiveEigenvalue> positive_eigenvalues(const StarlikeShape& shape, double tol) {
  return checked_positive(shape, tol);
}

double spectral_index(const StarlikeShape& shape, double tol) {
  if (shape.is_single_vertex()) return 0.0;
  const auto roots = nondegenerate_roots(shape, tol);
  if (roots.empty()) {
    throw Error(Errc::kRootCountMismatch, shape.to_string() + ": no root of rho_t = t found");
  }
  return std::sqrt(roots.back());
}

Spectrum full_spectrum(const StarlikeShape& shape, double tol) {
  Spectrum spectrum;
  spectrum.vertex_count = shape.vertex_count();
  if (shape.is_single_vertex()) {
    spectrum.entries.push_back({0.0, 1});
    return spectrum;
  }
  const auto positive = checked_positive(shape, tol);
  int count = 0;
  for (const auto& e : positive) {
    spectrum.entries.push_back({e.lambda(), e.multiplicity});
    count += e.multiplicity;
  }
  const int zeros = shape.vertex_count() - 2 * count;
  if (zeros > 0) spectrum.entries.push_back({0.0, zeros});
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
    spectrum.entries.push_back({-it->lambda(), it->multiplicity});
  }
  return spectrum;
}

std::vector<double> PrincipalEigenvector::flatten() const {
  std::vector<double> out{root};
  for (const auto& branch : branches) out.insert(out.end(), branch.begin(), branch.end());
  return out;
}

PrincipalEigenvector principal_eigenvector(const StarlikeShape& shape, double tol) {
  if (shape.is_single_vertex()) {
    throw std::invalid_argument("principal eigenvector needs at least one branch");
  }
  PrincipalEigenvector y;
  y.index = spectral_index(shape, tol);
  y.t = y.index * y.index;
  y.root = y.index;
  const auto rho_values = rho_sequence(y.t, shape.branch(1));
  for (int n : shape.branches()) {
    std::vector<double> branch(static_cast<std::size_t>(n));
    // Running product rho_t(m) * ... * rho_t(n) for m = n down to 1.
    double product = 1.0;
    for (int m = n; m >= 1; --m) {
      const auto& term = rho_values[static_cast<std::size_t>(m)];
      if (term.is_infinite()) {
        throw Error(Errc::kRootCountMismatch, "index landed on a pole of rho_t");
      }
      product *= term.value();
      branch[static_cast<std::size_t>(m - 1)] = std::pow(y.t, 0.5 * (m - n)) * product;
    }
    y.branches.push_back(std::move(branch));
  }
  return y;
}

double verify_eigenpair(const StarlikeShape& shape, double lambda, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(shape.vertex_count())) {
    throw Error(Errc::kDimensionMismatch, "vector has " + std::to_string(x.size()) +
                                              " entries for " +
                                              std::to_string(shape.vertex_count()) + " vertices");
  }
  const auto adj = adjacency(shape);
  double worst = 0.0;
  for (std::size_t v = 0; v < x.size(); ++v) {
    double ax = 0.0;
    for (int w : adj.neighbors[v]) ax += x[static_cast<std::size_t>(w)];
    worst = std::max(worst, std::abs(ax - lambda * x[v]));
  }
  return worst;
}

std::vector<double> degenerate_eigenvector(const StarlikeShape& shape, double t, int k, int l) {
  if (k == l || k < 1 || l < 1 || k > shape.branch_count() || l > shape.branch_count()) {
    throw std::invalid_argument("need two distinct branch indices");
  }
  const VertexNumbering numbering(shape);
  std::vector<double> x(static_cast<std::size_t>(shape.vertex_count()), 0.0);
  const int nk = shape.branch(k);
  const int nl = shape.branch(l);
  for (int i = 1; i <= nk; ++i) {
    x[static_cast<std::size_t>(numbering.index_of({k, i}))] = v_value(t, nk - i + 1);
  }
  for (int h = 1; h <= nl; ++h) {
    x[static_cast<std::size_t>(numbering.index_of({l, h}))] = -v_value(t, nl - h + 1);
  }
  return x;
}

}  // namespace starspec
