#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "lvelab/laurent.hpp"
#include "lvelab/partition.hpp"
#include "lvelab/permutation.hpp"

namespace lvelab {

/* Exact perturbative coefficients of one scalar cumulant: orders[n] is
   a_{pi,n}(N), the coefficient of (-lambda)^n as a Laurent polynomial
   in N.  Immutable once built. */
struct CoefficientTable {
  IntegerPartition partition;
  std::vector<LaurentPolyN> orders;

  int n_max() const { return static_cast<int>(orders.size()) - 1; }

  /* {"partition":[...],"orders":[{"n":...,"laurent":{...}},...]} with
     rational coefficients rendered as strings. */
  std::string to_json() const;
  static CoefficientTable from_json(const std::string& text);
};

/* a_{pi,n}(N) for n = 0..n_max, summing N^chi(G)/aut_order(G) over the
   isomorphism classes with n edges whose broken faces realize pi.
   Capacity sum(pi) <= 3, n_max <= 6. */
CoefficientTable perturbative_coefficients(const IntegerPartition& pi, int n_max,
                                           int workers = 0);

/* Coefficients of (-lambda)^n in the genus-stratified series K_{pi,h}:
   the same class sums restricted to genus h, without the N factor.
   Capacity as above. */
std::vector<BigRat> genus_coefficients(const IntegerPartition& pi, int h,
                                       int n_max, int workers = 0);

/* Independent a_{pi,n}(N) by exhaustive Wick pairings in the matrix
   representation: n quartic vertices, sum(pi) source pairs at fixed
   index values, exact index-loop counting, connectedness via the
   normalizing series.  Capacity sum(pi) <= 2, n <= 3. */
LaurentPolyN wick_oracle(const IntegerPartition& pi, int n);

/* Partial sum of the perturbative series at numeric lambda and N. */
std::complex<double> evaluate_series(const CoefficientTable& table,
                                     std::complex<double> lambda, double N,
                                     int n_trunc);

/* One entry of the order-2k cumulant tensor: scalar times the double
   permutation sum of delta products fixed by the index tuples
   (a_l, b_l, c_l, d_l).  The canonical pair has tau the identity and
   xi the inverse of the cycle permutation built from consecutive
   blocks of pi; the overload accepts any pair with tau xi^{-1} of
   cycle type pi and yields the same value.  Capacity sum(pi) <= 3. */
std::complex<double> cumulant_tensor_entry(
    const IntegerPartition& pi, std::complex<double> scalar,
    const std::vector<std::array<int, 4>>& indices);

std::complex<double> cumulant_tensor_entry(
    const IntegerPartition& pi, std::complex<double> scalar,
    const std::vector<std::array<int, 4>>& indices, const Permutation& tau,
    const Permutation& xi);

}  // namespace lvelab
