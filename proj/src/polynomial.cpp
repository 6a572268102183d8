#include "lvelab/polynomial.hpp"

#include <boost/multiprecision/integer.hpp>

namespace lvelab {

namespace {
const BigInt kZero = 0;
}

PolyZ::PolyZ(BigInt constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

PolyZ::PolyZ(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyZ PolyZ::monomial(int degree, BigInt coeff) {
  if (degree < 0) throw domain_error("monomial: negative degree");
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(coeff);
  return PolyZ(std::move(v));
}

void PolyZ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& PolyZ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const BigInt& PolyZ::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

PolyZ PolyZ::operator-() const {
  PolyZ r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

PolyZ PolyZ::operator+(const PolyZ& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return PolyZ(std::move(v));
}

PolyZ PolyZ::operator-(const PolyZ& o) const { return *this + (-o); }

PolyZ PolyZ::operator*(const PolyZ& o) const {
  if (is_zero() || o.is_zero()) return PolyZ();
  std::vector<BigInt> v(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return PolyZ(std::move(v));
}

PolyZ PolyZ::divide_exact(const PolyZ& d) const {
  if (d.is_zero()) throw invariant_error("polynomial division by zero");
  if (is_zero()) return PolyZ();
  if (degree() < d.degree()) throw invariant_error("polynomial division not exact");
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> quot(degree() - d.degree() + 1);
  for (int i = degree() - d.degree(); i >= 0; --i) {
    BigInt num = rem[i + d.degree()];
    if (num == 0) continue;
    if (num % d.leading() != 0) throw invariant_error("polynomial division not exact");
    BigInt q = num / d.leading();
    quot[i] = q;
    for (int j = 0; j <= d.degree(); ++j) rem[i + j] -= q * d.coeff(j);
  }
  for (const auto& r : rem)
    if (r != 0) throw invariant_error("polynomial division not exact");
  return PolyZ(std::move(quot));
}

BigInt PolyZ::content() const {
  BigInt g = 0;
  for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
  if (g < 0) g = -g;
  return g;
}

PolyZ PolyZ::primitive_part() const {
  if (is_zero()) return PolyZ();
  BigInt g = content();
  PolyZ r = *this;
  for (auto& x : r.c_) x /= g;
  if (r.leading() < 0)
    for (auto& x : r.c_) x = -x;
  return r;
}

BigRat PolyZ::eval(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

double PolyZ::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

std::string PolyZ::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) s += "-";
    BigInt a = c_[i] < 0 ? BigInt(-c_[i]) : c_[i];
    bool unit = (a == 1) && i > 0;
    if (!unit) s += a.str();
    if (i > 0) {
      if (!unit) s += "*";
      s += "N";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

/* Pseudo-remainder of a by b (degrees a >= b). */
static PolyZ pseudo_rem(PolyZ a, const PolyZ& b) {
  int e = a.degree() - b.degree() + 1;
  const BigInt& lb = b.leading();
  std::vector<BigInt> r(a.coeffs());
  int steps = 0;
  while (static_cast<int>(r.size()) - 1 >= b.degree() && !r.empty()) {
    // r = lb*r - lead(r)*x^(dr-db)*b
    BigInt lr = r.back();
    int shift = static_cast<int>(r.size()) - 1 - b.degree();
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= b.degree(); ++j) r[shift + j] -= lr * b.coeff(j);
    while (!r.empty() && r.back() == 0) r.pop_back();
    ++steps;
  }
  PolyZ rem{std::vector<BigInt>(r)};
  // pad multiplications so the result equals lb^e * a mod b (unused scalar factor is harmless
  // for gcd purposes)
  (void)e;
  (void)steps;
  return rem;
}

PolyZ PolyZ::gcd(PolyZ a, PolyZ b) {
  if (a.is_zero()) return b.is_zero() ? PolyZ() : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    PolyZ r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? PolyZ() : r.primitive_part();
  }
  return a.primitive_part();
}

}  // namespace lvelab
