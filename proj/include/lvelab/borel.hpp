#pragma once

#include <vector>

namespace lvelab {

/* Controls the Borel-Laplace evaluation.  Degree -1 selects the balanced
   default m = (len-1)/2 for both; explicit degrees must be nonnegative
   and need pade_numerator_degree + pade_denominator_degree + 1 supplied
   coefficients.  disc_radius > 0 restricts lambda to the Borel disc D_R. */
struct BorelConfig {
  int pade_numerator_degree = -1;
  int pade_denominator_degree = -1;
  int quadrature_nodes = 64;
  double disc_radius = 0.0;  // 0 disables the D_R membership check
  double strip_width = 0.0;  // 1/sigma, recorded for reporting only
};

/* Borel-Laplace resummation of sum_n a_n lambda^n at real lambda > 0:
   builds the Borel transform B(s) = sum_n a_n s^n / n!, replaces it by
   the Pade approximant of the configured degrees, and evaluates
   (1/lambda) integral_0^inf B(s) e^{-s/lambda} ds by Gauss-Laguerre
   quadrature with scale lambda.  A Pade pole on the positive axis inside
   the quadrature range raises resummation_error. */
double borel_sum(const std::vector<double>& coeffs, double lambda,
                 const BorelConfig& cfg = {});

/* Gauss-Laguerre abscissas and weights for weight e^{-u} on [0, inf). */
void gauss_laguerre(int nodes, std::vector<double>& abscissas,
                    std::vector<double>& weights);

}  // namespace lvelab
