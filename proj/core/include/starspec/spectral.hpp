#pragma once

#include <span>
#include <vector>

#include "starspec/shape.hpp"
#include "starspec/spectrum.hpp"

namespace starspec {

inline constexpr double kDefaultRootTolerance = 1e-10;

enum class EigenKind {
  kNonDegenerate,  // root of rho_t(n_1, ..., n_s) = t
  kDegenerate,     // pole shared by two or more branches
};

/// A positive eigenvalue lambda = sqrt(t).
struct PositiveEigenvalue {
  double t = 0.0;
  int multiplicity = 1;
  EigenKind kind = EigenKind::kNonDegenerate;
  /// 1-based branch indices whose rho_t(n_k) has a pole at t (degenerate only).
  std::vector<int> branches;

  double lambda() const;
};

/// All t > 0 with rho_t(n_1, ..., n_s) finite and equal to t, increasing.
///
/// The poles of the summands split (0, 2(N-1) + 1] into pole-free intervals.
/// Each interval is sampled on a grid (64 points, doubled until the number of
/// sign changes of rho_t(n) - t is the same for two refinements in a row,
/// skipping samples within 1e-9 of a pole) and every sign change is refined
/// by bisection so that sqrt(t) is accurate to about tol.
std::vector<double> nondegenerate_roots(const StarlikeShape& shape,
                                        double tol = kDefaultRootTolerance);

/// Eigenvalues from poles shared by at least two branches; multiplicity is
/// the number of sharing branches minus one. Sharing is decided on the exact
/// pole angle, not on floating values.
std::vector<PositiveEigenvalue> degenerate_eigenvalues(const StarlikeShape& shape);

/// Both kinds, by decreasing t.
std::vector<PositiveEigenvalue> positive_eigenvalues(const StarlikeShape& shape,
                                                     double tol = kDefaultRootTolerance);

/// Largest eigenvalue, sqrt(t_max) with t_max the largest nondegenerate root;
/// 0 for the single vertex.
double spectral_index(const StarlikeShape& shape, double tol = kDefaultRootTolerance);

/// Positive eigenvalues, their negatives, and zero filling the remaining
/// multiplicity. Throws Error{kRootCountMismatch} when the positive part
/// overflows the vertex count or the trace of A^2 disagrees with 2(N - 1).
Spectrum full_spectrum(const StarlikeShape& shape, double tol = kDefaultRootTolerance);

/// Principal eigenvector in closed form at t = index^2, normalized so the
/// root component is sqrt(t).
struct PrincipalEigenvector {
  double index = 0.0;
  double t = 0.0;
  double root = 0.0;
  /// branches[k-1][m-1] is the component at g_m^k.
  std::vector<std::vector<double>> branches;

  /// Components ordered by VertexNumbering.
  std::vector<double> flatten() const;
};

PrincipalEigenvector principal_eigenvector(const StarlikeShape& shape,
                                           double tol = kDefaultRootTolerance);

/// max_v |(A x)_v - lambda x_v|. Throws Error{kDimensionMismatch} unless x
/// has one entry per vertex.
double verify_eigenpair(const StarlikeShape& shape, double lambda, std::span<const double> x);

/// Eigenvector for a pole t shared by branches k and l: zero at the root and
/// off those branches, v_{n_k - i + 1}(t) along branch k and
/// -v_{n_l - h + 1}(t) along branch l.
std::vector<double> degenerate_eigenvector(const StarlikeShape& shape, double t, int k, int l);

}  // namespace starspec
