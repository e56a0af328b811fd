#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starspec/shape.hpp"
#include "starspec/spectrum.hpp"

namespace starspec {

enum class IntegralVectorFamily { kAllOnes, kAllTwos, kOneThrees, kOneTwoFives };

const char* family_name(IntegralVectorFamily family) noexcept;

/// Branch vectors solving rho_t(n_1, ..., n_s) = t for integer t >= 4:
/// t ones, t-1 twos, a one and t-2 threes, and 1, 2 followed by t-3 fives.
/// Throws Error{kTTooSmall} for t < 4.
StarlikeShape family_vector(IntegralVectorFamily family, int t);
std::array<StarlikeShape, 4> family_vectors(int t);

/// Exhaustive search over branch multisets with entries <= n_cap for exact
/// solutions of rho_t(n_1, ..., n_s) = t, sorted. Since every summand is at
/// least rho_t(1) = 1 when t >= 4, at most t branches are needed and partial
/// sums above t are pruned. Throws Error{kTTooSmall} for t < 4.
std::vector<StarlikeShape> verify_integral_vectors(int t, int n_cap);

struct IntegralityVerdict {
  bool is_integral = false;
  /// Integer eigenvalues with multiplicity when integral.
  std::vector<std::pair<long long, int>> integer_spectrum;
  /// Otherwise the largest eigenvalue that is not an integer, with the
  /// integers enclosing it.
  std::optional<double> non_integer_eigenvalue;
  long long gap_floor = 0;
  long long gap_ceil = 0;
};

/// Integral iff every computed eigenvalue is within 1e-8 of an integer and
/// the characteristic polynomial splits into integer linear factors.
IntegralityVerdict is_integral(const StarlikeShape& shape);

enum class IntegralClass { kA1, kStar, kTwoSpider, kNotIntegral };

const char* class_name(IntegralClass c) noexcept;

/// A1, the stars S_{t; 1, ..., 1} and the spiders S_{t-1; 2, ..., 2} with t
/// a perfect square; t is set for the star and spider families.
struct Classification {
  IntegralClass kind = IntegralClass::kNotIntegral;
  int t = 0;
};

Classification classify_integral(const StarlikeShape& shape);

/// Members of the closed-form families with at most max_vertices vertices,
/// ordered by vertex count.
std::vector<StarlikeShape> integral_family_members(int max_vertices);

/// Integral starlike graphs with at most max_vertices vertices. The closed
/// form is checked against exact certification of every starlike graph of
/// that size; disagreement throws Error{kCrossCheckMismatch}.
std::vector<StarlikeShape> enumerate_integral(int max_vertices);

}  // namespace starspec
