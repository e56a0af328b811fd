#include "starspec/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace starspec {

namespace mp = boost::multiprecision;

IntPoly::IntPoly(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

IntPoly::IntPoly(std::initializer_list<long long> coefficients) {
  coefficients_.reserve(coefficients.size());
  for (long long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }

IntPoly IntPoly::monomial(BigInt c, int degree) {
  std::vector<BigInt> coefficients(static_cast<std::size_t>(degree) + 1);
  coefficients.back() = std::move(c);
  return IntPoly(std::move(coefficients));
}

IntPoly IntPoly::linear_factor(const BigInt& root) {
  return IntPoly(std::vector<BigInt>{-root, BigInt(1)});
}

void IntPoly::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt IntPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(i)];
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigInt> out(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    out[i - 1] = coefficients_[i] * static_cast<long long>(i);
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] += other.coefficients_[i];
  }
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] -= other.coefficients_[i];
  }
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  if (is_zero() || other.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<BigInt> out(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  coefficients_ = std::move(out);
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  trim();
  return *this;
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Rational IntPoly::evaluate(const Rational& x) const {
  const BigInt num = mp::numerator(x);
  const BigInt den = mp::denominator(x);
  // Horner on the homogenized form, then one division.
  BigInt acc = 0;
  BigInt den_power = 1;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * num + *it * den_power;
    den_power *= den;
  }
  if (is_zero()) return 0;
  return Rational(acc, den_power / den);
}

double IntPoly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + it->convert_to<double>();
  }
  return acc;
}

int IntPoly::sign_at(const BigInt& num, const BigInt& den) const {
  BigInt acc = 0;
  BigInt den_power = 1;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * num + *it * den_power;
    den_power *= den;
  }
  return acc.sign();
}

int IntPoly::sign_at(const Rational& x) const {
  return sign_at(mp::numerator(x), mp::denominator(x));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coefficients_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const BigInt magnitude = mp::abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || magnitude != 1) {
      out += magnitude.str();
      if (i > 0) out += "*";
    }
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> remainder = a.coefficients();
  const auto& divisor = b.coefficients();
  const BigInt& lead = b.leading();
  const int shift_max = a.degree() - b.degree();
  std::vector<BigInt> quotient(static_cast<std::size_t>(shift_max) + 1);
  for (int shift = shift_max; shift >= 0; --shift) {
    const auto top = static_cast<std::size_t>(shift + b.degree());
    if (remainder[top] == 0) continue;
    BigInt q;
    BigInt r;
    mp::divide_qr(remainder[top], lead, q, r);
    if (r != 0) return std::nullopt;
    for (std::size_t j = 0; j < divisor.size(); ++j) {
      remainder[static_cast<std::size_t>(shift) + j] -= q * divisor[j];
    }
    quotient[static_cast<std::size_t>(shift)] = std::move(q);
  }
  for (const auto& c : remainder) {
    if (c != 0) return std::nullopt;
  }
  return IntPoly(std::move(quotient));
}

IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> remainder = a.coefficients();
  const auto& divisor = b.coefficients();
  const BigInt lead = mp::abs(b.leading());
  const int sign = b.leading().sign();
  for (int top = a.degree(); top >= b.degree(); --top) {
    // remainder <- |lc| * remainder - sign * r_top * x^(top - deg b) * b
    const BigInt factor = remainder[static_cast<std::size_t>(top)] * sign;
    for (auto& c : remainder) c *= lead;
    const auto shift = static_cast<std::size_t>(top - b.degree());
    for (std::size_t j = 0; j < divisor.size(); ++j) {
      remainder[shift + j] -= factor * divisor[j];
    }
  }
  return IntPoly(std::move(remainder));
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) {
    g = mp::gcd(g, c);
    if (g == 1) break;
  }
  return mp::abs(g);
}

IntPoly primitive_part(const IntPoly& p) {
  const BigInt c = content(p);
  if (c == 0 || c == 1) return p;
  std::vector<BigInt> out = p.coefficients();
  for (auto& x : out) x /= c;
  return IntPoly(std::move(out));
}

IntPoly gcd(IntPoly a, IntPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(signed_pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.leading() < 0) a = -a;
  return a;
}

std::vector<std::pair<IntPoly, int>> square_free_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> factors;
  if (p.degree() < 1) return factors;
  const IntPoly dp = p.derivative();
  const IntPoly c = gcd(p, dp);
  auto divide = [](const IntPoly& a, const IntPoly& b) {
    auto q = exact_divide(a, b);
    if (!q) throw std::logic_error("non-exact division in square-free decomposition");
    return *q;
  };
  // c is primitive, so by Gauss's lemma both divisions stay in Z[x] and
  // w, y carry the same constant factor.
  IntPoly w = divide(p, c);
  IntPoly y = divide(dp, c);
  IntPoly z = y - w.derivative();
  int multiplicity = 1;
  while (w.degree() >= 1) {
    IntPoly g = gcd(w, z);
    if (g.degree() >= 1) factors.emplace_back(g, multiplicity);
    w = divide(w, g);
    y = divide(z, g);
    z = y - w.derivative();
    ++multiplicity;
  }
  return factors;
}

std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
  std::vector<IntPoly> chain{primitive_part(p), primitive_part(p.derivative())};
  while (chain.back().degree() > 0) {
    IntPoly r = signed_pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(-primitive_part(r));
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const Rational& x) {
  const BigInt num = mp::numerator(x);
  const BigInt den = mp::denominator(x);
  int variations = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q.sign_at(num, den);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

BigInt root_bound(const IntPoly& p) {
  if (p.degree() < 1) return 1;
  BigInt largest = 0;
  for (int i = 0; i < p.degree(); ++i) {
    largest = std::max(largest, BigInt(mp::abs(p.coefficient(i))));
  }
  const BigInt lead = mp::abs(p.leading());
  const BigInt cauchy = 1 + (largest + lead - 1) / lead;
  BigInt bound = 1;
  while (bound <= cauchy) bound *= 2;
  return bound;
}

}  // namespace starspec
