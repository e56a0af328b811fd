#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starspec/numeric.hpp"

namespace starspec {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first with no trailing zeros. The zero polynomial
/// has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coefficients);
  IntPoly(std::initializer_list<long long> coefficients);

  static IntPoly constant(BigInt c);
  static IntPoly monomial(BigInt c, int degree);
  /// The linear polynomial x - root.
  static IntPoly linear_factor(const BigInt& root);

  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  /// Coefficient of x^i; zero beyond the degree.
  BigInt coefficient(int i) const;
  const BigInt& leading() const { return coefficients_.back(); }

  IntPoly derivative() const;
  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  BigInt evaluate(const BigInt& x) const;
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  /// Sign of p(num/den) for den > 0, computed without fractions.
  int sign_at(const BigInt& num, const BigInt& den) const;
  int sign_at(const Rational& x) const;

  /// Human-readable form, highest degree first, e.g. "x^5 - 4*x^3".
  std::string to_string() const;

 private:
  void trim();

  std::vector<BigInt> coefficients_;
};

/// Quotient a / b when b divides a in Z[x]; nullopt otherwise.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder of a by b scaled by |lc(b)|^(deg a - deg b + 1), so the
/// sign of the ordinary remainder is preserved.
IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Positive gcd of the coefficients (0 for the zero polynomial).
BigInt content(const IntPoly& p);

/// p divided by its content, with the sign of p kept.
IntPoly primitive_part(const IntPoly& p);

/// Primitive gcd with positive leading coefficient.
IntPoly gcd(IntPoly a, IntPoly b);

/// Yun's decomposition p = c * prod_i f_i^i with every f_i square-free,
/// primitive, positive-leading and pairwise coprime. Returned as
/// (f_i, i) pairs, skipping constant factors.
std::vector<std::pair<IntPoly, int>> square_free_decomposition(const IntPoly& p);

/// Sturm chain p, p', -rem(...), ... using signed pseudo-remainders made
/// primitive. Requires a square-free non-constant p.
std::vector<IntPoly> sturm_sequence(const IntPoly& p);

/// Number of sign changes of the chain evaluated at x, zeros dropped.
int sign_variations(const std::vector<IntPoly>& chain, const Rational& x);

/// Power of two strictly greater than the absolute value of every real root.
BigInt root_bound(const IntPoly& p);

}  // namespace starspec
