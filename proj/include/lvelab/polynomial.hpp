#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "lvelab/errors.hpp"

namespace lvelab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/* Dense polynomial in the formal matrix size N with big-integer coefficients,
   ascending powers, trailing zeros trimmed. */
class PolyZ {
public:
  PolyZ() = default;
  PolyZ(BigInt constant);  // NOLINT: implicit by design
  PolyZ(long long constant) : PolyZ(BigInt(constant)) {}
  explicit PolyZ(std::vector<BigInt> coeffs);

  static PolyZ monomial(int degree, BigInt coeff = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const BigInt& coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const;

  PolyZ operator-() const;
  PolyZ operator+(const PolyZ& o) const;
  PolyZ operator-(const PolyZ& o) const;
  PolyZ operator*(const PolyZ& o) const;
  bool operator==(const PolyZ& o) const { return c_ == o.c_; }

  /* Exact division; throws invariant_error if the division is not exact. */
  PolyZ divide_exact(const PolyZ& d) const;

  BigInt content() const;         // gcd of coefficients, >= 0
  PolyZ primitive_part() const;   // content divided out, leading coeff > 0

  BigRat eval(const BigRat& x) const;
  double eval(double x) const;

  std::string str() const;  // human-readable, for diagnostics

  /* Primitive gcd with positive leading coefficient. */
  static PolyZ gcd(PolyZ a, PolyZ b);

private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace lvelab
