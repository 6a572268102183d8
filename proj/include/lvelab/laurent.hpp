#pragma once

#include <complex>
#include <map>
#include <string>

#include "lvelab/polynomial.hpp"

namespace lvelab {

/* Laurent polynomial in N with exact rational coefficients. */
class LaurentPolyN {
public:
  LaurentPolyN() = default;
  static LaurentPolyN term(int power, const BigRat& coeff);

  bool is_zero() const { return c_.empty(); }
  const std::map<int, BigRat>& terms() const { return c_; }
  BigRat coeff(int power) const;
  int min_power() const;  // throws on zero polynomial
  int max_power() const;

  void add_term(int power, const BigRat& coeff);

  LaurentPolyN operator-() const;
  LaurentPolyN operator+(const LaurentPolyN& o) const;
  LaurentPolyN operator-(const LaurentPolyN& o) const;
  LaurentPolyN operator*(const LaurentPolyN& o) const;
  LaurentPolyN operator*(const BigRat& s) const;
  bool operator==(const LaurentPolyN& o) const { return c_ == o.c_; }

  /* Exact quotient by another Laurent polynomial; invariant_error when the
     quotient is not itself a Laurent polynomial. */
  LaurentPolyN divide_exact(const LaurentPolyN& o) const;

  BigRat eval(const BigRat& n) const;  // n must be nonzero if negative powers occur
  std::complex<double> eval(const std::complex<double>& n) const;

  std::string str() const;
  /* JSON object mapping power (as string key) to rational coefficient string,
     e.g. {"1":"9","-1":"1"}. */
  std::string to_json() const;
  static LaurentPolyN from_json(const std::string& text);

private:
  void prune(int power);
  std::map<int, BigRat> c_;
};

std::string rat_str(const BigRat& r);
BigRat rat_parse(const std::string& s);

}  // namespace lvelab
