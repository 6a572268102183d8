#include "lvelab/borel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "lvelab/errors.hpp"

namespace lvelab {

namespace {

double poly_eval(const std::vector<double>& coeffs, double x) {
  double value = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) value = value * x + coeffs[i];
  return value;
}

/* Denominator coefficients (q_0 = 1 fixed) of the (L, M) Pade approximant
   to the series b, solved as a row-equilibrated least-squares problem so
   that degenerate tables still yield a valid representative. */
std::vector<double> pade_denominator(const std::vector<double>& b, int L, int M) {
  std::vector<double> q(M + 1, 0.0);
  q[0] = 1.0;
  if (M == 0) return q;
  auto coeff = [&](int idx) {
    return idx >= 0 && idx < static_cast<int>(b.size()) ? b[idx] : 0.0;
  };
  Eigen::MatrixXd lhs(M, M);
  Eigen::VectorXd rhs(M);
  for (int i = 1; i <= M; ++i) {
    for (int j = 1; j <= M; ++j) lhs(i - 1, j - 1) = coeff(L + i - j);
    rhs(i - 1) = -coeff(L + i);
    double scale = std::max(lhs.row(i - 1).cwiseAbs().maxCoeff(),
                            std::abs(rhs(i - 1)));
    if (scale > 0.0) {
      lhs.row(i - 1) /= scale;
      rhs(i - 1) /= scale;
    }
  }
  Eigen::VectorXd sol =
      lhs.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
  for (int j = 1; j <= M; ++j) q[j] = sol(j - 1);
  return q;
}

/* Real positive roots within (0, limit] of a polynomial normalised to
   poly[0] = 1.  The companion matrix is built for the reversed polynomial,
   whose leading coefficient is poly[0]; this keeps the matrix entries
   bounded by the coefficient span even when the leading coefficient of
   poly itself is tiny, which is the norm for least-squares denominators. */
std::vector<double> positive_real_roots(const std::vector<double>& poly,
                                        double limit) {
  int degree = static_cast<int>(poly.size()) - 1;
  while (degree > 0 && poly[degree] == 0.0) --degree;
  std::vector<double> roots;
  if (degree < 1) return roots;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i)
    companion(i, degree - 1) = -poly[degree - i] / poly[0];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  for (int i = 0; i < degree; ++i) {
    std::complex<double> z = solver.eigenvalues()(i);
    if (std::abs(z.imag()) <= 1e-7 * (1.0 + std::abs(z.real())) &&
        z.real() >= 1.0 / limit)
      roots.push_back(1.0 / z.real());
  }
  return roots;
}

}  // namespace

void gauss_laguerre(int nodes, std::vector<double>& abscissas,
                    std::vector<double>& weights) {
  if (nodes < 1) throw domain_error("gauss_laguerre: need at least one node");
  // Eigenvalues of the Laguerre Jacobi matrix (diagonal 2i+1, subdiagonal i)
  // seed Newton iterations on the recurrence.  Weights then come from the
  // classical formula w = x / ((n+1) L_{n+1}(x))^2, evaluated with the
  // recurrence scaled by e^{-x/2}; the eigenvector formula only reaches
  // absolute accuracy, which destroys the tiny tail weights that matter
  // for transforms of large exponential type.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(nodes, nodes);
  for (int i = 0; i < nodes; ++i) jacobi(i, i) = 2.0 * i + 1.0;
  for (int i = 1; i < nodes; ++i) jacobi(i, i - 1) = jacobi(i - 1, i) = i;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      jacobi, Eigen::EigenvaluesOnly);
  abscissas.resize(nodes);
  weights.resize(nodes);
  for (int i = 0; i < nodes; ++i) {
    double x = solver.eigenvalues()(i);
    double l = 0.0, lm1 = 0.0;
    for (int iter = 0; iter < 4; ++iter) {
      lm1 = 0.0;
      l = std::exp(-0.5 * x);
      for (int k = 0; k < nodes; ++k) {
        double next = ((2.0 * k + 1.0 - x) * l - k * lm1) / (k + 1.0);
        lm1 = l;
        l = next;
      }
      double deriv = nodes * (l - lm1) / x;
      double step = l / deriv;
      x -= step;
      if (std::abs(step) <= 1e-15 * x) break;
    }
    lm1 = 0.0;
    l = std::exp(-0.5 * x);
    for (int k = 0; k <= nodes; ++k) {
      double next = ((2.0 * k + 1.0 - x) * l - k * lm1) / (k + 1.0);
      lm1 = l;
      l = next;
    }
    // l holds L_{n+1}(x) e^{-x/2}, so its square already carries the e^{-x}
    // that the weight formula divides out; restore it explicitly.
    double scaled = (nodes + 1.0) * l;
    abscissas[i] = x;
    weights[i] = x * std::exp(-x) / (scaled * scaled);
  }
}

double borel_sum(const std::vector<double>& coeffs, double lambda,
                 const BorelConfig& cfg) {
  if (!(lambda > 0.0)) throw domain_error("borel_sum: lambda must be positive");
  if (cfg.disc_radius > 0.0 && !(lambda < cfg.disc_radius))
    throw domain_error("borel_sum: lambda outside the Borel disc");
  if (cfg.quadrature_nodes < 16)
    throw domain_error("borel_sum: need at least 16 quadrature nodes");
  int len = static_cast<int>(coeffs.size());
  if (len < 1) throw domain_error("borel_sum: empty coefficient sequence");
  int L = cfg.pade_numerator_degree;
  int M = cfg.pade_denominator_degree;
  if (L < 0 && M < 0) L = M = (len - 1) / 2;
  if (L < 0 || M < 0)
    throw domain_error("borel_sum: Pade degrees must both be set or both auto");
  if (L + M + 1 > len)
    throw domain_error("borel_sum: not enough coefficients for the Pade degrees");

  std::vector<double> nodes, weights;
  gauss_laguerre(cfg.quadrature_nodes, nodes, weights);

  /* Work in the scaled Borel variable sigma = s / s_scale so that the
     quadrature range maps to [0, 1]; keeps the linear algebra in range
     for transforms of large exponential type. */
  double s_scale = lambda * nodes.back();
  std::vector<double> b(len);
  for (int n = 0; n < len; ++n) {
    double value = coeffs[n];
    for (int i = 1; i <= n; ++i) value *= s_scale / i;
    b[n] = value;
  }

  std::vector<double> q = pade_denominator(b, L, M);
  std::vector<double> p(L + 1, 0.0);
  for (int i = 0; i <= L; ++i)
    for (int j = 0; j <= std::min(i, M); ++j) p[i] += q[j] * b[i - j];

  std::vector<double> confirm;
  bool have_confirm = false;
  for (double root : positive_real_roots(q, 1.0)) {
    /* A numerator zero at the same point is the spurious pole-zero doublet
       of a degenerate table, not a true pole.  "Zero" is judged against the
       term-magnitude scale of P at the root, since high-order numerator
       coefficients of a near-degenerate table are cancellation noise. */
    double reference = 0.0, power = 1.0;
    for (int i = 0; i <= L; ++i) {
      reference += std::abs(p[i]) * power;
      power *= root;
    }
    if (std::abs(poly_eval(p, root)) <= 1e-9 * reference) continue;
    /* True Borel singularities persist at the same spot when the
       denominator degree drops by one; real roots minted by an
       ill-conditioned solve wander with the order. */
    bool genuine = true;
    if (M >= 2) {
      if (!have_confirm) {
        confirm = positive_real_roots(pade_denominator(b, L, M - 1), 1.0);
        have_confirm = true;
      }
      genuine = false;
      for (double other : confirm)
        if (std::abs(other - root) <= 1e-3 * root) genuine = true;
    }
    if (genuine)
      throw resummation_error("borel_sum: Pade pole on the positive axis");
  }

  double integral = 0.0;
  for (int i = 0; i < cfg.quadrature_nodes; ++i) {
    double sigma = lambda * nodes[i] / s_scale;
    double denom = poly_eval(q, sigma);
    if (std::abs(denom) < 1e-300)
      throw resummation_error("borel_sum: quadrature node hits a Pade pole");
    integral += weights[i] * poly_eval(p, sigma) / denom;
  }
  return integral;
}

}  // namespace lvelab
