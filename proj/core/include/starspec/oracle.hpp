#pragma once

#include <iosfwd>
#include <vector>

#include "starspec/numeric.hpp"
#include "starspec/poly.hpp"
#include "starspec/shape.hpp"
#include "starspec/spectrum.hpp"

namespace starspec {

/// Path polynomials p_0 = 1, p_1 = x, p_{m+1} = x p_m - p_{m-1}, for m in
/// [0, max_m]; p_m is the characteristic polynomial of the m-vertex path.
std::vector<IntPoly> path_polynomials(int max_m);

/// det(xI - A) for the shape's adjacency matrix, from the branch
/// decomposition x * prod p_{n_k} - sum_k p_{n_k - 1} * prod_{j != k} p_{n_j}.
IntPoly char_poly(const StarlikeShape& shape);

inline constexpr int kBruteforceMaxVertices = 16;

/// det(xI - A) by fraction-free (Bareiss) elimination over Z[x] on the
/// explicit adjacency matrix. Throws Error{kTooLarge} above 16 vertices.
IntPoly char_poly_bruteforce(const StarlikeShape& shape);

/// A real root of an integer polynomial isolated in [lo, hi] (lo == hi for
/// exact rational roots).
struct IsolatedRoot {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
  double value = 0.0;
};

/// All real roots with exact multiplicities, in increasing order. Each
/// square-free factor is isolated with its Sturm chain and refined by exact
/// bisection until hi - lo <= precision.
std::vector<IsolatedRoot> sturm_roots(const IntPoly& poly, double precision);

inline constexpr int kOracleMaxVertices = 64;

/// Spectrum from the exact characteristic polynomial. Throws
/// Error{kTooLarge} above 64 vertices.
Spectrum oracle_spectrum(const StarlikeShape& shape, double precision = 1e-12);

/// One decimal coefficient per line, lowest degree first.
void write_coefficients(std::ostream& out, const IntPoly& poly);
IntPoly read_coefficients(std::istream& in);

}  // namespace starspec
