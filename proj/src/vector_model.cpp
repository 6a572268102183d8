#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "lvelab/errors.hpp"
#include "lvelab/oracles.hpp"

namespace lvelab {

namespace {

/* Gauss-Hermite rule for the weight e^{-x^2}: nodes are eigenvalues of the
   Jacobi matrix, weights come from the orthonormal-polynomial identity
   w_i = 1 / sum_{k<n} p_k(x_i)^2, which is accurate relative to each
   weight.  The rule integrates constants exactly, so sum w_i = sqrt(pi). */
void gauss_hermite(int nodes, std::vector<double>& abscissas,
                   std::vector<double>& weights) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(nodes, nodes);
  for (int i = 1; i < nodes; ++i) {
    double off = std::sqrt(i / 2.0);
    jacobi(i, i - 1) = off;
    jacobi(i - 1, i) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi,
                                                    Eigen::EigenvaluesOnly);
  abscissas.resize(nodes);
  weights.resize(nodes);
  const double p0 = std::pow(M_PI, -0.25);
  for (int i = 0; i < nodes; ++i) {
    double x = es.eigenvalues()(i);
    double prev = 0.0;
    double cur = p0;
    double sum = cur * cur;
    for (int k = 0; k < nodes - 1; ++k) {
      double next =
          (x * cur - std::sqrt(k / 2.0) * prev) / std::sqrt((k + 1) / 2.0);
      prev = cur;
      cur = next;
      sum += cur * cur;
    }
    abscissas[i] = x;
    weights[i] = 1.0 / sum;
  }
}

std::complex<double> z_value(int N, std::complex<double> lambda,
                             std::complex<double> j, int nodes) {
  std::vector<double> x, w;
  gauss_hermite(nodes, x, w);
  std::complex<double> c = std::sqrt(lambda / static_cast<double>(N));
  std::complex<double> sum = 0.0;
  for (int i = 0; i < nodes; ++i) {
    double a = std::sqrt(2.0) * x[i];
    std::complex<double> z = 1.0 - std::complex<double>(0.0, 1.0) * c * a;
    std::complex<double> exponent =
        -static_cast<double>(N) * std::log(z) + static_cast<double>(N) * j / z;
    sum += w[i] * std::exp(exponent);
  }
  return sum / std::sqrt(M_PI);
}

}  // namespace

std::complex<double> vector_logz(int N, std::complex<double> lambda,
                                 std::complex<double> j, int quad_nodes) {
  if (N < 1) throw domain_error("vector_logz: N must be positive");
  if (lambda.imag() == 0.0 && lambda.real() < 0.0)
    throw domain_error("vector_logz: negative real coupling lies on the cut");
  if (j.real() < 0.0)
    throw domain_error("vector_logz: source strength must have Re j >= 0");
  if (quad_nodes < 16)
    throw domain_error("vector_logz: need at least 16 quadrature nodes");

  std::complex<double> fine = z_value(N, lambda, j, quad_nodes);
  std::complex<double> coarse = z_value(N, lambda, j, quad_nodes / 2);
  if (std::abs(fine - coarse) > 1e-8 * (1.0 + std::abs(fine)))
    throw resummation_error("vector_logz: quadrature did not converge");
  return std::log(fine);
}

}  // namespace lvelab
