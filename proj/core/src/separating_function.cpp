#include "starspec/separating_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "starspec/error.hpp"

namespace starspec {
namespace {

template <class T>
void require_positive(const T& t) {
  if (!(t > 0)) throw Error(Errc::kNonPositiveT, "separating function needs t > 0");
}

void require_non_negative(int n) {
  if (n < 0) throw std::invalid_argument("rho index must be non-negative");
}

}  // namespace

std::vector<ExtendedRho<double>> rho_sequence(double t, int max_n, FloatMode mode) {
  require_positive(t);
  require_non_negative(max_n);
  const double threshold = mode.tolerance * std::max(1.0, std::abs(t));
  std::vector<ExtendedRho<double>> seq;
  seq.reserve(static_cast<std::size_t>(max_n) + 1);
  seq.push_back(ExtendedRho<double>::finite(0.0));
  for (int n = 1; n <= max_n; ++n) {
    const auto& prev = seq.back();
    if (prev.is_infinite()) {
      seq.push_back(ExtendedRho<double>::finite(0.0));
    } else if (std::abs(t - prev.value()) <= threshold) {
      seq.push_back(ExtendedRho<double>::infinity());
    } else {
      seq.push_back(ExtendedRho<double>::finite(t / (t - prev.value())));
    }
  }
  return seq;
}

std::vector<ExtendedRho<Rational>> rho_sequence(const Rational& t, int max_n) {
  require_positive(t);
  require_non_negative(max_n);
  std::vector<ExtendedRho<Rational>> seq;
  seq.reserve(static_cast<std::size_t>(max_n) + 1);
  seq.push_back(ExtendedRho<Rational>::finite(Rational(0)));
  for (int n = 1; n <= max_n; ++n) {
    const auto& prev = seq.back();
    if (prev.is_infinite()) {
      seq.push_back(ExtendedRho<Rational>::finite(Rational(0)));
    } else if (prev.value() == t) {
      seq.push_back(ExtendedRho<Rational>::infinity());
    } else {
      seq.push_back(ExtendedRho<Rational>::finite(t / (t - prev.value())));
    }
  }
  return seq;
}

ExtendedRho<double> rho(double t, int n, FloatMode mode) {
  return rho_sequence(t, n, mode).back();
}

ExtendedRho<Rational> rho(const Rational& t, int n) {
  return rho_sequence(t, n).back();
}

ExtendedRho<double> rho_sum(double t, const StarlikeShape& shape, FloatMode mode) {
  require_positive(t);
  if (shape.is_single_vertex()) return ExtendedRho<double>::finite(0.0);
  const auto seq = rho_sequence(t, shape.branch(1), mode);
  double sum = 0.0;
  for (int n : shape.branches()) {
    const auto& term = seq[static_cast<std::size_t>(n)];
    if (term.is_infinite()) return ExtendedRho<double>::infinity();
    sum += term.value();
  }
  return ExtendedRho<double>::finite(sum);
}

ExtendedRho<Rational> rho_sum(const Rational& t, const StarlikeShape& shape) {
  require_positive(t);
  if (shape.is_single_vertex()) return ExtendedRho<Rational>::finite(Rational(0));
  const auto seq = rho_sequence(t, shape.branch(1));
  Rational sum = 0;
  for (int n : shape.branches()) {
    const auto& term = seq[static_cast<std::size_t>(n)];
    if (term.is_infinite()) return ExtendedRho<Rational>::infinity();
    sum += term.value();
  }
  return ExtendedRho<Rational>::finite(sum);
}

double v_value(double t, int n) {
  require_positive(t);
  require_non_negative(n);
  if (n == 0) return 0.0;
  const double root = std::sqrt(t);
  double previous = 0.0;
  double current = 1.0;
  for (int i = 1; i < n; ++i) {
    const double next = root * current - previous;
    previous = current;
    current = next;
  }
  return current;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const BigInt num_root = boost::multiprecision::sqrt(num);
  const BigInt den_root = boost::multiprecision::sqrt(den);
  if (num_root * num_root != num || den_root * den_root != den) return std::nullopt;
  return Rational(num_root, den_root);
}

std::optional<Rational> v_value(const Rational& t, int n) {
  require_positive(t);
  require_non_negative(n);
  const auto root = rational_sqrt(t);
  if (!root) return std::nullopt;
  if (n == 0) return Rational(0);
  Rational previous = 0;
  Rational current = 1;
  for (int i = 1; i < n; ++i) {
    Rational next = *root * current - previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

std::vector<BranchPole> branch_pole_set(int n) {
  if (n < 1) throw std::invalid_argument("branch length must be positive");
  std::vector<BranchPole> poles;
  // j/(n+1) = 1/2 gives t = 0, which is not in the domain.
  for (int j = n / 2; j >= 1; --j) {
    const int g = std::gcd(j, n + 1);
    BranchPole pole;
    pole.numerator = j / g;
    pole.denominator = (n + 1) / g;
    const double c = std::cos(std::numbers::pi * j / (n + 1));
    pole.t = 4.0 * c * c;
    const double nearest = std::round(pole.t);
    if (std::abs(pole.t - nearest) < 1e-9 && nearest > 0) {
      const Rational candidate(static_cast<long long>(nearest));
      const auto previous = rho(candidate, n - 1);
      if (previous.is_finite() && previous.value() == candidate) {
        pole.exact = candidate;
        pole.t = nearest;
      }
    }
    poles.push_back(std::move(pole));
  }
  return poles;
}

}  // namespace starspec
