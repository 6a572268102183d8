#pragma once

#include <complex>
#include <string>

#include "lvelab/polynomial.hpp"

namespace lvelab {

/* Reduced ratio of integer polynomials in the formal matrix size N.
   Canonical form: numerator and denominator share no polynomial factor and
   no common integer content, and the denominator's leading coefficient is
   positive.  Equality is therefore plain member comparison. */
class RationalFunctionN {
public:
  RationalFunctionN() : num_(), den_(1) {}
  RationalFunctionN(PolyZ num, PolyZ den);
  RationalFunctionN(long long c) : num_(c), den_(1) {}  // NOLINT
  static RationalFunctionN from_rat(const BigRat& r);

  const PolyZ& num() const { return num_; }
  const PolyZ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunctionN operator-() const;
  RationalFunctionN operator+(const RationalFunctionN& o) const;
  RationalFunctionN operator-(const RationalFunctionN& o) const;
  RationalFunctionN operator*(const RationalFunctionN& o) const;
  RationalFunctionN operator/(const RationalFunctionN& o) const;
  bool operator==(const RationalFunctionN& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  /* Exact evaluation at integer N; domain_error on a pole. */
  BigRat eval(const BigInt& n) const;
  double eval(double n) const;

  std::string str() const;

  /* JSON object {"num":[...],"den":[...]} with ascending-power coefficient
     strings; parse counterpart below. */
  std::string to_json() const;
  static RationalFunctionN from_json(const std::string& text);

private:
  void reduce();
  PolyZ num_, den_;
};

}  // namespace lvelab
