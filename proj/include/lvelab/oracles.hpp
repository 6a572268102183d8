#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "lvelab/bounds.hpp"
#include "lvelab/lve_graph.hpp"

namespace lvelab {

/* Monte Carlo estimate with its sampling error.  The layout of chains,
   batches and chunks is fixed by (seed, steps) alone, so estimates are
   bit-identical across worker counts. */
struct McEstimate {
  std::complex<double> mean{0.0, 0.0};
  double stderror = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;
};

/* Scalar cumulants of the k = 2 sector together with the condition number
   of the 2x2 system that extracts them from the invariant observables. */
struct K2Estimates {
  McEstimate k2;
  McEstimate k11;
  double condition = 0.0;
};

/* Source bilinear JJ†: Hermitian positive semidefinite, with its operator
   norm (largest eigenvalue). */
class SourceProduct {
 public:
  static SourceProduct from_matrix(const Eigen::MatrixXcd& jj);
  static SourceProduct from_source(const Eigen::MatrixXcd& j);

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  double norm() const { return norm_; }
  int size() const { return static_cast<int>(matrix_.rows()); }

 private:
  SourceProduct(Eigen::MatrixXcd m, double n) : matrix_(std::move(m)), norm_(n) {}
  Eigen::MatrixXcd matrix_;
  double norm_;
};

/* Metropolis estimate of K_(1) = <Tr MM†>/N for the quartic matrix measure
   at real lambda >= 0 (lambda = 0 is the Gaussian sanity mode).  Runs a
   fixed set of independent chains with 10% burn-in and step auto-tuning;
   the error is a batch-means standard error.  Capacity N <= 8. */
McEstimate mc_matrix_cumulant_k1(int N, double lambda, long long steps,
                                 std::uint64_t seed);

/* Joint estimate of K_(2) and K_(1,1) from the connected parts of
   (Tr MM†)^2 and Tr(MM†MM†).  The 2x2 extraction system follows from the
   structure sum with the canonical pair permutations; errors come from a
   jackknife over batches.  Needs N >= 2, where the system is regular. */
K2Estimates mc_matrix_cumulant_k2(int N, double lambda, long long steps,
                                  std::uint64_t seed);

/* Monte Carlo value of the LVE amplitude of g: uniform weakening parameters
   per tree edge, descending sorted uniforms for the ordered loop-edge
   parameters, Hermitian Gaussians mixed through the square root of the
   weakened covariance, then the face-trace product of resolvents and
   source insertions.  Capacity |V| <= 4, N <= 8. */
McEstimate mc_lve_amplitude(const LveGraph& g, const ComplexCoupling& lambda,
                            int N, const SourceProduct& jj, long long samples,
                            std::uint64_t seed);

/* log of the one-dimensional intermediate-field integral of the vector
   model by Gauss-Hermite quadrature, normalized to 0 at lambda = 0, j = 0.
   j is the scalar J†J; a complex value is accepted so that derivative
   checks can step off the axis, but its real part must be >= 0.  Throws
   resummation_error when halving the node count moves the result. */
std::complex<double> vector_logz(int N, std::complex<double> lambda,
                                 std::complex<double> j, int quad_nodes = 96);

}  // namespace lvelab
