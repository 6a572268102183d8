#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lvelab {

/* Polynomial in q with arbitrary-precision integer coefficients,
   stored densely by power of q.  Trailing zeros are trimmed, so the
   zero polynomial has empty coefficients. */
class QPolynomial {
 public:
  using Int = boost::multiprecision::cpp_int;

  QPolynomial() = default;
  explicit QPolynomial(std::vector<Int> coeffs);

  const std::vector<Int>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Int coefficient(int power) const;

  /* Value at q = 1, i.e. the coefficient sum. */
  Int at_one() const;

  QPolynomial operator+(const QPolynomial& other) const;
  QPolynomial operator*(const QPolynomial& other) const;
  bool operator==(const QPolynomial& other) const = default;

  /* (p(q) - p(1)) / (q - 1), always an exact polynomial division. */
  QPolynomial divided_difference() const;

  /* Human-readable form such as "q^2 + 2*q^3"; "0" for zero. */
  std::string str() const;

 private:
  std::vector<Int> coeffs_;
};

/* Coefficients G_0(q)..G_{n_max}(q) of the planar two-point generating
   function G(q) = sum_n G_n(q) lambda^n solving the ciliated-vertex
   Schwinger-Dyson equation
       G = q + lambda q G^2 + lambda q^2 (G(q) - G(1)) / (q - 1)
   order by order.  Capacity n_max <= 30. */
std::vector<QPolynomial> sde_series(int n_max);

/* Number of planar one-cilium classes with n edges: 2 * 3^n * C_n / (n+2)
   with C_n the n-th Catalan number. */
boost::multiprecision::cpp_int planar_count(int n);

/* Closed form of G(1, lambda) on the principal real branch, valid for
   lambda <= 1/12; lambda = 0 returns the limit 1.  Throws domain_error
   past the branch point. */
double planar_closed_form(double lambda);

/* CSV dump with header n,planar_count,G_n; the G_n field lists the
   coefficients of G_n(q) by power of q, space separated. */
std::string planar_csv(int n_max);

}  // namespace lvelab
