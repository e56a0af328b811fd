#include "starspec/oracle.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "starspec/error.hpp"

namespace starspec {

std::vector<IntPoly> path_polynomials(int max_m) {
  std::vector<IntPoly> p{IntPoly{1}};
  const IntPoly x{0, 1};
  if (max_m >= 1) p.push_back(x);
  for (int m = 1; m < max_m; ++m) {
    p.push_back(x * p[static_cast<std::size_t>(m)] - p[static_cast<std::size_t>(m - 1)]);
  }
  return p;
}

IntPoly char_poly(const StarlikeShape& shape) {
  const IntPoly x{0, 1};
  if (shape.is_single_vertex()) return x;
  const auto p = path_polynomials(shape.branch(1));
  const auto at = [&p](int m) -> const IntPoly& { return p[static_cast<std::size_t>(m)]; };

  IntPoly all = IntPoly{1};
  for (int n : shape.branches()) all *= at(n);
  IntPoly result = x * all;
  const int s = shape.branch_count();
  for (int k = 1; k <= s; ++k) {
    IntPoly term = at(shape.branch(k) - 1);
    for (int j = 1; j <= s; ++j) {
      if (j != k) term *= at(shape.branch(j));
    }
    result -= term;
  }
  return result;
}

IntPoly char_poly_bruteforce(const StarlikeShape& shape) {
  const int n = shape.vertex_count();
  if (n > kBruteforceMaxVertices) {
    throw Error(Errc::kTooLarge, "brute-force determinant limited to " +
                                     std::to_string(kBruteforceMaxVertices) + " vertices");
  }
  const auto size = static_cast<std::size_t>(n);
  std::vector<std::vector<IntPoly>> m(size, std::vector<IntPoly>(size));
  for (std::size_t i = 0; i < size; ++i) m[i][i] = IntPoly{0, 1};
  for (const auto& [u, v] : adjacency(shape).edges) {
    m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = IntPoly{-1};
    m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = IntPoly{-1};
  }

  // Leading principal minors of xI - A are monic of full degree, so the
  // pivots never vanish and no row exchanges are needed.
  IntPoly previous{1};
  for (std::size_t k = 0; k + 1 < size; ++k) {
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        const IntPoly numerator = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto quotient = exact_divide(numerator, previous);
        if (!quotient) throw std::logic_error("Bareiss step was not exact");
        m[i][j] = std::move(*quotient);
      }
    }
    previous = m[k][k];
  }
  return m[size - 1][size - 1];
}

namespace {

class FactorIsolator {
 public:
  FactorIsolator(const IntPoly& factor, int multiplicity, const Rational& precision,
                 std::vector<IsolatedRoot>& out)
      : factor_(factor),
        chain_(sturm_sequence(factor)),
        multiplicity_(multiplicity),
        precision_(precision),
        out_(out) {}

  void run() {
    const Rational bound(root_bound(factor_));
    isolate(-bound, bound, variations(-bound), variations(bound));
  }

 private:
  int variations(const Rational& x) const { return sign_variations(chain_, x); }

  // Roots of the square-free factor in (a, b] number va - vb.
  void isolate(const Rational& a, const Rational& b, int va, int vb) {
    const int count = va - vb;
    if (count <= 0) return;
    if (count == 1) {
      refine(a, b);
      return;
    }
    const Rational mid = (a + b) / 2;
    const int vm = variations(mid);
    isolate(a, mid, va, vm);
    isolate(mid, b, vm, vb);
  }

  // Exactly one simple root in (a, b]: the sign on (root, b] is sign f(b).
  void refine(Rational a, Rational b) {
    const int sign_b = factor_.sign_at(b);
    if (sign_b == 0) {
      emit(b, b);
      return;
    }
    while (b - a > precision_) {
      const Rational mid = (a + b) / 2;
      const int sign_mid = factor_.sign_at(mid);
      if (sign_mid == 0) {
        emit(mid, mid);
        return;
      }
      if (sign_mid == sign_b) {
        b = mid;
      } else {
        a = mid;
      }
    }
    emit(a, b);
  }

  void emit(const Rational& lo, const Rational& hi) {
    IsolatedRoot root;
    root.lo = lo;
    root.hi = hi;
    root.multiplicity = multiplicity_;
    root.value = to_double((lo + hi) / 2);
    out_.push_back(std::move(root));
  }

  const IntPoly& factor_;
  std::vector<IntPoly> chain_;
  int multiplicity_;
  Rational precision_;
  std::vector<IsolatedRoot>& out_;
};

}  // namespace

std::vector<IsolatedRoot> sturm_roots(const IntPoly& poly, double precision) {
  if (poly.is_zero()) throw std::invalid_argument("sturm_roots of the zero polynomial");
  if (!(precision > 0)) throw std::invalid_argument("precision must be positive");
  const Rational tolerance(precision);
  std::vector<IsolatedRoot> roots;
  for (const auto& [factor, multiplicity] : square_free_decomposition(poly)) {
    FactorIsolator(factor, multiplicity, tolerance, roots).run();
  }
  std::sort(roots.begin(), roots.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
  return roots;
}

Spectrum oracle_spectrum(const StarlikeShape& shape, double precision) {
  if (shape.vertex_count() > kOracleMaxVertices) {
    throw Error(Errc::kTooLarge, "oracle spectrum limited to " +
                                     std::to_string(kOracleMaxVertices) + " vertices");
  }
  Spectrum spectrum;
  spectrum.vertex_count = shape.vertex_count();
  const auto roots = sturm_roots(char_poly(shape), precision);
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    const double value = it->lo == 0 && it->hi == 0 ? 0.0 : it->value;
    spectrum.entries.push_back({value, it->multiplicity});
  }
  return spectrum;
}

void write_coefficients(std::ostream& out, const IntPoly& poly) {
  for (const auto& c : poly.coefficients()) out << c.str() << '\n';
}

IntPoly read_coefficients(std::istream& in) {
  std::vector<BigInt> coefficients;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      coefficients.emplace_back(line.substr(first, last - first + 1));
    } catch (const std::exception&) {
      throw Error(Errc::kParse, "bad polynomial coefficient: " + line);
    }
  }
  return IntPoly(std::move(coefficients));
}

}  // namespace starspec
