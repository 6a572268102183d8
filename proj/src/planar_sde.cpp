#include "lvelab/planar_sde.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "lvelab/errors.hpp"

namespace lvelab {

namespace mp = boost::multiprecision;

QPolynomial::QPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial::Int QPolynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[power];
}

QPolynomial::Int QPolynomial::at_one() const {
  Int sum = 0;
  for (const Int& c : coeffs_) sum += c;
  return sum;
}

QPolynomial QPolynomial::operator+(const QPolynomial& other) const {
  std::vector<Int> out(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator*(const QPolynomial& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return QPolynomial();
  std::vector<Int> out(coeffs_.size() + other.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::divided_difference() const {
  /* p(q) - p(1) = sum_i c_i (q^i - 1) and (q^i - 1)/(q - 1) = 1 + q + ...
     + q^{i-1}, so the quotient coefficient of q^j sums c_i over i > j. */
  if (coeffs_.size() <= 1) return QPolynomial();
  std::vector<Int> out(coeffs_.size() - 1, Int(0));
  Int tail = 0;
  for (std::size_t j = coeffs_.size() - 1; j >= 1; --j) {
    tail += coeffs_[j];
    out[j - 1] = tail;
  }
  return QPolynomial(std::move(out));
}

std::string QPolynomial::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Int c = coeffs_[i];
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int a = mp::abs(c);
    if (i == 0) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << "q";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

std::vector<QPolynomial> sde_series(int n_max) {
  if (n_max < 0) throw domain_error("sde_series: n_max must be nonnegative");
  if (n_max > 30) throw capacity_error("sde_series: n_max capped at 30");
  std::vector<QPolynomial> g;
  g.reserve(n_max + 1);
  const QPolynomial q(std::vector<QPolynomial::Int>{0, 1});
  const QPolynomial q2(std::vector<QPolynomial::Int>{0, 0, 1});
  g.push_back(q);
  for (int n = 1; n <= n_max; ++n) {
    QPolynomial quad;
    for (int i = 0; i < n; ++i) quad = quad + g[i] * g[n - 1 - i];
    g.push_back(q * quad + q2 * g[n - 1].divided_difference());
  }
  return g;
}

mp::cpp_int planar_count(int n) {
  if (n < 0) throw domain_error("planar_count: n must be nonnegative");
  mp::cpp_int catalan = 1;  // C_n = binom(2n, n) / (n+1)
  for (int i = 0; i < n; ++i) {
    catalan *= 2 * (2 * i + 1);
    catalan /= i + 2;
  }
  mp::cpp_int value = 2 * mp::pow(mp::cpp_int(3), n) * catalan;
  if (value % (n + 2) != 0)
    throw invariant_error("planar_count: non-integral result");
  return value / (n + 2);
}

double planar_closed_form(double lambda) {
  if (!(lambda <= 1.0 / 12.0))
    throw domain_error("planar_closed_form: lambda past the branch point 1/12");
  if (std::abs(lambda) < 1e-3) {
    /* Near zero the closed form loses all precision to cancellation;
       the series converges geometrically here (|12 lambda| < 0.012). */
    double sum = 0.0;
    double term = 1.0;  // planar_count(n) * lambda^n
    for (int n = 0; n <= 40; ++n) {
      sum += term;
      term *= lambda * 6.0 * (2 * n + 1) / (n + 3.0);
    }
    return sum;
  }
  return (-1.0 + 18.0 * lambda + std::pow(1.0 - 12.0 * lambda, 1.5)) /
         (54.0 * lambda * lambda);
}

std::string planar_csv(int n_max) {
  std::vector<QPolynomial> g = sde_series(n_max);
  std::ostringstream out;
  out << "n,planar_count,G_n\n";
  for (int n = 0; n <= n_max; ++n) {
    out << n << "," << planar_count(n) << ",";
    const auto& coeffs = g[n].coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i > 0) out << " ";
      out << coeffs[i];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace lvelab
