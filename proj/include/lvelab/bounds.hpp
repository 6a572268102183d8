#pragma once

#include <complex>
#include <cstdint>

namespace lvelab {

/* Coupling in polar form on the cut plane: modulus rho > 0 and argument
   strictly inside (-pi, pi), the cut lying on the negative real axis. */
struct ComplexCoupling {
  double rho;
  double theta;

  ComplexCoupling(double rho_in, double theta_in);
  static ComplexCoupling from_complex(std::complex<double> lambda);

  std::complex<double> value() const;
  /* cos(theta/2), the angular factor appearing in every bound. */
  double half_angle_cos() const;
};

/* Analyticity domains: the cardioid 4|lambda| < cos^2(theta/2), the
   smaller topological cardioid with 12|lambda|, the piecewise vector
   model curve, and the Borel disc Re(1/lambda) > 1/R tangent at the
   origin (pass R through the radius argument). */
enum class Domain { C, CTilde, CPrime, DiscR };

bool in_domain(const ComplexCoupling& lambda, Domain which, double radius = 0.0);

/* Largest epsilon with (4|lambda|/cos^2(theta/2)) (1 + 2 eps/cos(theta/2))
   still below 1, capped for couplings near zero where it diverges. */
double source_norm_threshold(const ComplexCoupling& lambda, double cap = 1e12);

/* Per-tree bound N^{2-p} |lambda|^E (k!)^2 2^{2k} /
   (cos^{2E+k}(theta/2) (E+1)!). */
double tree_bound(int edges, int k, int p, const ComplexCoupling& lambda,
                  double N);

/* Remainder bound of the order-n perturbative expansion, with
   x = 4|lambda|/cos^2(theta/2) required below 1. */
double perturbative_remainder_bound(int n, int k, int p,
                                    const ComplexCoupling& lambda, double N);

/* Remainder bound of the genus-g topological expansion, with
   y = 12|lambda|/cos^2(theta/2) required below 1 and the existential
   genus constant supplied by the caller. */
double topological_remainder_bound(int g, int k, int p,
                                   const ComplexCoupling& lambda, double N,
                                   double genus_constant = 1.0);

/* Samples standard Hermitian Gaussians A and returns the largest operator
   norm of (1 - i sqrt(lambda/N) A)^{-1} observed, computed from singular
   values; the lemma bounds it by 1/cos(theta/2). */
double resolvent_norm_check(const ComplexCoupling& lambda, int N, int samples,
                            std::uint64_t seed);

}  // namespace lvelab
