#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "starspec/numeric.hpp"
#include "starspec/shape.hpp"

namespace starspec {

/// Value of rho_t(n): finite, or the pole marker produced when the previous
/// term equals t.
template <class T>
class ExtendedRho {
 public:
  static ExtendedRho infinity() { return ExtendedRho(); }
  static ExtendedRho finite(T value) { return ExtendedRho(std::move(value)); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  const T& value() const { return value_.value(); }

  friend bool operator==(const ExtendedRho&, const ExtendedRho&) = default;

 private:
  ExtendedRho() = default;
  explicit ExtendedRho(T value) : value_(std::move(value)) {}

  std::optional<T> value_;
};

inline constexpr double kDefaultPoleTolerance = 1e-12;

/// Floating evaluation. A term is treated as equal to t (and the next one as
/// a pole) when |rho - t| <= tolerance * max(1, |t|).
struct FloatMode {
  double tolerance = kDefaultPoleTolerance;
};

/// rho_t(0) = 0, rho_t(n+1) = t / (t - rho_t(n)); a pole at n+1 resets the
/// sequence to 0 at n+2. Throws Error{kNonPositiveT} for t <= 0.
ExtendedRho<double> rho(double t, int n, FloatMode mode = {});
ExtendedRho<Rational> rho(const Rational& t, int n);

/// All of rho_t(0..max_n) in one pass.
std::vector<ExtendedRho<double>> rho_sequence(double t, int max_n, FloatMode mode = {});
std::vector<ExtendedRho<Rational>> rho_sequence(const Rational& t, int max_n);

/// Sum of rho_t over the branch lengths; infinite if any summand is.
ExtendedRho<double> rho_sum(double t, const StarlikeShape& shape, FloatMode mode = {});
ExtendedRho<Rational> rho_sum(const Rational& t, const StarlikeShape& shape);

/// v_0 = 0, v_1 = 1, v_{n+2} = sqrt(t) v_{n+1} - v_n.
double v_value(double t, int n);

/// Exact v_n(t); only available when t is the square of a rational.
std::optional<Rational> v_value(const Rational& t, int n);

/// Exact square root of a non-negative rational, if it is rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// A positive zero of v_{n+1}(t), i.e. a pole of rho_t(n):
/// t = 4 cos^2(pi * numerator / denominator), with numerator/denominator the
/// reduced form of j/(n+1) and 0 < j/(n+1) < 1/2. Two branch lengths share a
/// pole exactly when these reduced fractions coincide.
struct BranchPole {
  double t = 0.0;
  int numerator = 0;
  int denominator = 1;
  /// Set when t is rational (t in {1, 2, 3}); certified by the exact
  /// recurrence: rho_t(n-1) == t. In that case t is the exact integer.
  std::optional<Rational> exact;

  std::pair<int, int> angle() const noexcept { return {numerator, denominator}; }
};

/// Poles of rho_t(n) for t > 0, in increasing order of t.
std::vector<BranchPole> branch_pole_set(int n);

}  // namespace starspec
