#include "starspec/integrality.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "starspec/error.hpp"
#include "starspec/oracle.hpp"
#include "starspec/separating_function.hpp"
#include "starspec/spectral.hpp"

namespace starspec {
namespace {

void require_t_at_least_4(int t) {
  if (t < 4) {
    throw Error(Errc::kTTooSmall, "integral branch vectors are characterized for t >= 4, got " +
                                      std::to_string(t));
  }
}

int perfect_square_root(int t) {
  const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(t))));
  return r * r == t ? r : -1;
}

bool all_equal_to(const StarlikeShape& shape, int n) {
  return std::all_of(shape.branches().begin(), shape.branches().end(),
                     [n](int b) { return b == n; });
}

void search(const std::vector<Rational>& rho_values, const Rational& target, int max_entry,
            int max_branches, const Rational& sum, std::vector<int>& prefix,
            std::vector<StarlikeShape>& found) {
  if (!prefix.empty() && sum == target) {
    found.emplace_back(prefix);
    return;
  }
  if (static_cast<int>(prefix.size()) == max_branches) return;
  for (int n = max_entry; n >= 1; --n) {
    Rational next = sum + rho_values[static_cast<std::size_t>(n)];
    if (next > target) continue;
    prefix.push_back(n);
    search(rho_values, target, n, max_branches, next, prefix, found);
    prefix.pop_back();
  }
}

constexpr double kIntegerTolerance = 1e-8;

bool by_size(const StarlikeShape& a, const StarlikeShape& b) {
  if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
  return a < b;
}

}  // namespace

const char* family_name(IntegralVectorFamily family) noexcept {
  switch (family) {
    case IntegralVectorFamily::kAllOnes: return "AllOnes";
    case IntegralVectorFamily::kAllTwos: return "AllTwos";
    case IntegralVectorFamily::kOneThrees: return "OneThrees";
    case IntegralVectorFamily::kOneTwoFives: return "OneTwoFives";
  }
  return "Unknown";
}

StarlikeShape family_vector(IntegralVectorFamily family, int t) {
  require_t_at_least_4(t);
  const auto count = static_cast<std::size_t>(t);
  switch (family) {
    case IntegralVectorFamily::kAllOnes:
      return StarlikeShape(std::vector<int>(count, 1));
    case IntegralVectorFamily::kAllTwos:
      return StarlikeShape(std::vector<int>(count - 1, 2));
    case IntegralVectorFamily::kOneThrees: {
      std::vector<int> v(count - 2, 3);
      v.push_back(1);
      return StarlikeShape(std::move(v));
    }
    case IntegralVectorFamily::kOneTwoFives: {
      std::vector<int> v(count - 3, 5);
      v.push_back(2);
      v.push_back(1);
      return StarlikeShape(std::move(v));
    }
  }
  throw std::invalid_argument("unknown family");
}

std::array<StarlikeShape, 4> family_vectors(int t) {
  return {family_vector(IntegralVectorFamily::kAllOnes, t),
          family_vector(IntegralVectorFamily::kAllTwos, t),
          family_vector(IntegralVectorFamily::kOneThrees, t),
          family_vector(IntegralVectorFamily::kOneTwoFives, t)};
}

std::vector<StarlikeShape> verify_integral_vectors(int t, int n_cap) {
  require_t_at_least_4(t);
  if (n_cap < 1) throw std::invalid_argument("entry cap must be positive");
  const Rational target(t);
  std::vector<Rational> rho_values;
  for (const auto& value : rho_sequence(target, n_cap)) {
    // For t >= 4 the recurrence stays below t, so no pole can occur.
    if (value.is_infinite()) throw std::logic_error("unexpected pole for t >= 4");
    rho_values.push_back(value.value());
  }
  std::vector<StarlikeShape> found;
  std::vector<int> prefix;
  search(rho_values, target, n_cap, t, Rational(0), prefix, found);
  std::sort(found.begin(), found.end());
  return found;
}

IntegralityVerdict is_integral(const StarlikeShape& shape) {
  IntegralityVerdict verdict;

  // Exact route: peel integer roots off the characteristic polynomial.
  IntPoly rest = char_poly(shape);
  const long long bound =
      static_cast<long long>(std::floor(std::sqrt(2.0 * shape.edge_count()))) + 1;
  std::vector<std::pair<long long, int>> integer_roots;
  for (long long r = bound; r >= -bound && rest.degree() > 0; --r) {
    const IntPoly factor = IntPoly::linear_factor(BigInt(r));
    int multiplicity = 0;
    while (rest.degree() > 0) {
      auto quotient = exact_divide(rest, factor);
      if (!quotient) break;
      rest = std::move(*quotient);
      ++multiplicity;
    }
    if (multiplicity > 0) integer_roots.emplace_back(r, multiplicity);
  }
  const bool splits = rest.degree() == 0;

  // Floating route: the separating-function spectrum.
  const Spectrum spectrum = full_spectrum(shape);
  std::optional<double> witness;
  for (const auto& e : spectrum.entries) {
    if (std::abs(e.eigenvalue - std::round(e.eigenvalue)) > kIntegerTolerance) {
      witness = e.eigenvalue;
      break;
    }
  }
  if (!witness && !splits) {
    // Both routes must agree; fall back to the exact spectrum for a witness.
    for (const auto& e : oracle_spectrum(shape).entries) {
      if (std::abs(e.eigenvalue - std::round(e.eigenvalue)) > kIntegerTolerance) {
        witness = e.eigenvalue;
        break;
      }
    }
    if (!witness) witness = spectrum.index();
  }

  verdict.is_integral = splits && !witness;
  if (verdict.is_integral) {
    verdict.integer_spectrum = std::move(integer_roots);
  } else {
    verdict.non_integer_eigenvalue = witness;
    verdict.gap_floor = static_cast<long long>(std::floor(*witness));
    verdict.gap_ceil = static_cast<long long>(std::ceil(*witness));
  }
  return verdict;
}

const char* class_name(IntegralClass c) noexcept {
  switch (c) {
    case IntegralClass::kA1: return "A1";
    case IntegralClass::kStar: return "Star";
    case IntegralClass::kTwoSpider: return "TwoSpider";
    case IntegralClass::kNotIntegral: return "NotIntegral";
  }
  return "Unknown";
}

Classification classify_integral(const StarlikeShape& shape) {
  if (shape.is_single_vertex()) return {IntegralClass::kA1, 0};
  const int s = shape.branch_count();
  if (all_equal_to(shape, 1) && perfect_square_root(s) > 0) {
    return {IntegralClass::kStar, s};
  }
  // t = 1 would leave no branches, so the spider family starts at t = 4.
  if (all_equal_to(shape, 2) && s + 1 >= 4 && perfect_square_root(s + 1) > 0) {
    return {IntegralClass::kTwoSpider, s + 1};
  }
  return {IntegralClass::kNotIntegral, 0};
}

std::vector<StarlikeShape> integral_family_members(int max_vertices) {
  std::vector<StarlikeShape> members;
  if (max_vertices < 1) return members;
  members.emplace_back();
  for (int r = 1; r * r + 1 <= max_vertices; ++r) {
    members.emplace_back(std::vector<int>(static_cast<std::size_t>(r * r), 1));
  }
  for (int r = 2; 2 * (r * r - 1) + 1 <= max_vertices; ++r) {
    members.emplace_back(std::vector<int>(static_cast<std::size_t>(r * r - 1), 2));
  }
  std::sort(members.begin(), members.end(), by_size);
  return members;
}

std::vector<StarlikeShape> enumerate_integral(int max_vertices) {
  if (max_vertices < 1) throw std::invalid_argument("max_vertices must be positive");
  const auto from_families = integral_family_members(max_vertices);

  std::set<StarlikeShape> graphs{StarlikeShape{}};
  for (const auto& shape : all_shapes(max_vertices - 1)) graphs.insert(canonical_graph(shape));
  std::vector<StarlikeShape> certified;
  for (const auto& shape : graphs) {
    if (is_integral(shape).is_integral) certified.push_back(shape);
  }
  std::sort(certified.begin(), certified.end(), by_size);

  if (certified != from_families) {
    std::string detail = "closed form lists " + std::to_string(from_families.size()) +
                         " graphs, exhaustive certification finds " +
                         std::to_string(certified.size());
    throw Error(Errc::kCrossCheckMismatch, detail);
  }
  return certified;
}

}  // namespace starspec
