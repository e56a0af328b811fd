#include <algorithm>
#include <cmath>
#include <string>

#include "starspec/cli.hpp"
#include "starspec/oracle.hpp"
#include "starspec/spectral.hpp"

namespace starspec::cli {
namespace {

constexpr std::size_t kMaxReported = 5;

void record(PropertyResult& property, const StarlikeShape& shape, const std::string& message) {
  ++property.failure_count;
  if (property.failures.size() < kMaxReported) {
    property.failures.push_back(shape.to_string() + ": " + message);
  }
}

template <class Check>
void guarded(PropertyResult& property, const StarlikeShape& shape, Check&& check) {
  ++property.checked;
  try {
    check();
  } catch (const std::exception& e) {
    record(property, shape, e.what());
  }
}

}  // namespace

std::vector<PropertyResult> run_selfcheck(int budget) {
  std::vector<StarlikeShape> shapes{StarlikeShape{}};
  for (auto& shape : all_shapes(budget)) shapes.push_back(std::move(shape));

  PropertyResult equivalence;
  equivalence.name = "oracle_equivalence";
  PropertyResult invariants;
  invariants.name = "spectrum_invariants";
  PropertyResult principal;
  principal.name = "principal_eigenvector";
  PropertyResult degenerate;
  degenerate.name = "degenerate_eigenvectors";
  PropertyResult bruteforce;
  bruteforce.name = "charpoly_bareiss";
  PropertyResult identities;
  identities.name = "charpoly_identities";
  PropertyResult round_trip;
  round_trip.name = "edge_list_round_trip";

  for (const auto& shape : shapes) {
    Spectrum spectrum;
    guarded(equivalence, shape, [&] {
      spectrum = full_spectrum(shape);
      if (!spectra_match(spectrum, oracle_spectrum(shape), 1e-8)) {
        record(equivalence, shape, "separating-function spectrum differs from the oracle");
      }
    });
    guarded(invariants, shape, [&] {
      for (const auto& problem : spectrum_violations(full_spectrum(shape))) {
        record(invariants, shape, problem);
      }
    });

    if (!shape.is_single_vertex()) {
      guarded(principal, shape, [&] {
        const auto y = principal_eigenvector(shape);
        const auto flat = y.flatten();
        const double largest = *std::max_element(flat.begin(), flat.end());
        if (!std::all_of(flat.begin(), flat.end(), [](double c) { return c > 0; })) {
          record(principal, shape, "non-positive component");
        }
        if (verify_eigenpair(shape, y.index, flat) > 1e-9 * largest) {
          record(principal, shape, "eigen-residual above 1e-9");
        }
      });
      guarded(degenerate, shape, [&] {
        for (const auto& e : degenerate_eigenvalues(shape)) {
          const int first = e.branches.front();
          for (std::size_t i = 1; i < e.branches.size(); ++i) {
            const auto x = degenerate_eigenvector(shape, e.t, first, e.branches[i]);
            if (verify_eigenpair(shape, e.lambda(), x) > 1e-9) {
              record(degenerate, shape, "construction fails at t=" + std::to_string(e.t));
            }
          }
        }
      });
    }

    if (shape.branch_sum() <= 10) {
      guarded(bruteforce, shape, [&] {
        if (char_poly(shape) != char_poly_bruteforce(shape)) {
          record(bruteforce, shape, "closed form differs from elimination");
        }
      });
    }

    guarded(identities, shape, [&] {
      const IntPoly chi = char_poly(shape);
      const int n = shape.vertex_count();
      if (chi.degree() != n || chi.leading() != 1) record(identities, shape, "not monic of degree N");
      // Newton: sum of roots = -c_{N-1}, sum of squares = c_{N-1}^2 - 2 c_{N-2}.
      const BigInt c1 = chi.coefficient(n - 1);
      const BigInt c2 = chi.coefficient(n - 2);
      if (c1 != 0) record(identities, shape, "roots do not sum to zero");
      if (c1 * c1 - 2 * c2 != 2 * (n - 1)) record(identities, shape, "sum of squares is not 2(N-1)");
      for (int i = 0; i <= n; ++i) {
        if ((n - i) % 2 != 0 && chi.coefficient(i) != 0) {
          record(identities, shape, "chi(-x) != (-1)^N chi(x)");
          break;
        }
      }
    });

    guarded(round_trip, shape, [&] {
      const auto back = shape_from_edge_list(adjacency(shape).edges);
      const auto expected =
          shape.branch_count() == 2 ? StarlikeShape({shape.branch_sum()}) : shape;
      if (back != expected) record(round_trip, shape, "recognized as " + back.to_string());
    });
  }

  return {equivalence, invariants, principal, degenerate, bruteforce, identities, round_trip};
}

}  // namespace starspec::cli
