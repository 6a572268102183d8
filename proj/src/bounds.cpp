#include "lvelab/bounds.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "lvelab/errors.hpp"
#include "lvelab/rng.hpp"

namespace lvelab {

namespace {

const double kPi = 3.14159265358979323846;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/* x = 4|lambda|/cos^2(theta/2), the cardioid membership ratio. */
double cardioid_ratio(const ComplexCoupling& lambda) {
  double c = lambda.half_angle_cos();
  return 4.0 * lambda.rho / (c * c);
}

}  // namespace

ComplexCoupling::ComplexCoupling(double rho_in, double theta_in)
    : rho(rho_in), theta(theta_in) {
  if (!(rho > 0.0)) throw domain_error("coupling: modulus must be positive");
  if (!(std::abs(theta) < kPi))
    throw domain_error("coupling: argument must lie strictly inside (-pi, pi)");
}

ComplexCoupling ComplexCoupling::from_complex(std::complex<double> lambda) {
  double rho = std::abs(lambda);
  if (!(rho > 0.0)) throw domain_error("coupling: modulus must be positive");
  return ComplexCoupling(rho, std::arg(lambda));
}

std::complex<double> ComplexCoupling::value() const {
  return std::polar(rho, theta);
}

double ComplexCoupling::half_angle_cos() const { return std::cos(theta / 2.0); }

bool in_domain(const ComplexCoupling& lambda, Domain which, double radius) {
  double c = lambda.half_angle_cos();
  switch (which) {
    case Domain::C:
      return 4.0 * lambda.rho < c * c;
    case Domain::CTilde:
      return 12.0 * lambda.rho < c * c;
    case Domain::CPrime: {
      double at = std::abs(lambda.theta);
      if (at <= kPi / 2.0) return 4.0 * lambda.rho < 1.0;
      double edge = std::cos(at / 2.0 - kPi / 4.0);
      return 4.0 * lambda.rho < edge * edge;
    }
    case Domain::DiscR:
      if (!(radius > 0.0))
        throw domain_error("in_domain: the Borel disc needs a positive radius");
      return std::cos(lambda.theta) / lambda.rho > 1.0 / radius;
  }
  throw domain_error("in_domain: unknown domain");
}

double source_norm_threshold(const ComplexCoupling& lambda, double cap) {
  if (!in_domain(lambda, Domain::C))
    throw domain_error("source_norm_threshold: coupling outside the cardioid");
  double x = cardioid_ratio(lambda);
  double eps = lambda.half_angle_cos() * (1.0 / x - 1.0) / 2.0;
  return std::min(eps, cap);
}

double tree_bound(int edges, int k, int p, const ComplexCoupling& lambda,
                  double N) {
  if (edges < 0 || k < 0 || p < 0)
    throw domain_error("tree_bound: counts must be nonnegative");
  if (!in_domain(lambda, Domain::C))
    throw domain_error("tree_bound: coupling outside the cardioid");
  double c = lambda.half_angle_cos();
  double kf = factorial(k);
  return std::pow(N, 2 - p) * std::pow(lambda.rho, edges) * kf * kf *
         std::pow(2.0, 2 * k) /
         (std::pow(c, 2 * edges + k) * factorial(edges + 1));
}

double perturbative_remainder_bound(int n, int k, int p,
                                    const ComplexCoupling& lambda, double N) {
  if (n < 0 || k < 0 || p < 0)
    throw domain_error("perturbative_remainder_bound: counts must be nonnegative");
  double x = cardioid_ratio(lambda);
  if (!(x < 1.0))
    throw domain_error("perturbative_remainder_bound: 4|lambda|/cos^2 >= 1");
  double c = lambda.half_angle_cos();
  double prefactor = std::pow(N, 2 - p) * std::pow(2.0, 3 * k - 1) *
                     factorial(k) / std::pow(c, k);
  return prefactor * factorial(n + 1) * std::pow(x, n + 1) *
         (x / std::pow(1.0 - x, n + 2) + std::pow(2.0, k + n + 2));
}

double topological_remainder_bound(int g, int k, int p,
                                   const ComplexCoupling& lambda, double N,
                                   double genus_constant) {
  if (g < 0 || k < 0 || p < 0)
    throw domain_error("topological_remainder_bound: counts must be nonnegative");
  double c = lambda.half_angle_cos();
  double y = 12.0 * lambda.rho / (c * c);
  if (!(y < 1.0))
    throw domain_error("topological_remainder_bound: 12|lambda|/cos^2 >= 1");
  double prefactor = std::pow(N, 2 - 2 * (g + 1) - p) * std::pow(2.0, 3 * k) *
                     factorial(k) / std::pow(c, k);
  return prefactor * genus_constant * std::pow(y, 2 * g + 2) *
         factorial(4 * g + k + 1) / std::pow(1.0 - y, 4 * g + k);
}

double resolvent_norm_check(const ComplexCoupling& lambda, int N, int samples,
                            std::uint64_t seed) {
  if (N < 1) throw domain_error("resolvent_norm_check: N must be positive");
  if (samples < 1)
    throw domain_error("resolvent_norm_check: need at least one sample");
  std::complex<double> root =
      std::sqrt(lambda.value() / static_cast<double>(N));
  std::complex<double> factor = std::complex<double>(0.0, 1.0) * root;
  Rng rng(seed);
  Eigen::MatrixXcd a(N, N);
  double max_norm = 0.0;
  for (int s = 0; s < samples; ++s) {
    for (int i = 0; i < N; ++i) {
      a(i, i) = rng.gaussian();
      for (int j = i + 1; j < N; ++j) {
        std::complex<double> z = rng.complex_gaussian();
        a(i, j) = z;
        a(j, i) = std::conj(z);
      }
    }
    Eigen::MatrixXcd m =
        Eigen::MatrixXcd::Identity(N, N) - factor * a;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    double smallest = svd.singularValues()(N - 1);
    if (!(smallest > 0.0))
      throw invariant_error("resolvent_norm_check: singular resolvent");
    max_norm = std::max(max_norm, 1.0 / smallest);
  }
  return max_norm;
}

}  // namespace lvelab
