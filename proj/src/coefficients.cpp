#include "lvelab/coefficients.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "lvelab/census.hpp"
#include "lvelab/errors.hpp"

namespace lvelab {

namespace {

using nlohmann::json;

void check_capacity(const IntegerPartition& pi, int n_max) {
  if (n_max < 0) throw domain_error("coefficients: n_max must be nonnegative");
  if (pi.size() == 0)
    throw domain_error("coefficients: pi must partition some k >= 1");
  if (pi.sum() > 3) throw capacity_error("coefficients: sum(pi) capped at 3");
  if (n_max > 6) throw capacity_error("coefficients: n_max capped at 6");
}

/* The permutation cycling each consecutive block of pi, e.g. pi = (1,2)
   gives (0)(1 2). */
Permutation block_cycles(const IntegerPartition& pi) {
  std::vector<int> img(pi.sum());
  int start = 0;
  for (int part : pi.parts) {
    for (int j = 0; j < part; ++j) img[start + j] = start + (j + 1) % part;
    start += part;
  }
  return Permutation(img);
}

}  // namespace

std::string CoefficientTable::to_json() const {
  json orders_json = json::array();
  for (int n = 0; n <= n_max(); ++n)
    orders_json.push_back(
        {{"n", n}, {"laurent", json::parse(orders[n].to_json())}});
  json out = {{"partition", partition.parts}, {"orders", orders_json}};
  return out.dump();
}

CoefficientTable CoefficientTable::from_json(const std::string& text) {
  json in = json::parse(text);
  CoefficientTable table;
  table.partition = IntegerPartition(in.at("partition").get<std::vector<int>>());
  const json& orders_json = in.at("orders");
  table.orders.resize(orders_json.size());
  for (const json& entry : orders_json) {
    int n = entry.at("n").get<int>();
    if (n < 0 || n >= static_cast<int>(table.orders.size()))
      throw domain_error("coefficient table: order index out of range");
    table.orders[n] = LaurentPolyN::from_json(entry.at("laurent").dump());
  }
  return table;
}

CoefficientTable perturbative_coefficients(const IntegerPartition& pi, int n_max,
                                           int workers) {
  check_capacity(pi, n_max);
  CoefficientTable table;
  table.partition = pi;
  table.orders.resize(n_max + 1);
  MapFilters filters;
  filters.broken_partition = pi;
  for (int n = 0; n <= n_max; ++n) {
    LaurentPolyN a;
    if (pi.sum() <= n + 1)  // fewer edges cannot host the cilia connectedly
      for (const MapClass& cls : enumerate_maps(n, pi.sum(), filters, workers))
        a.add_term(cls.map.euler_characteristic(), BigRat(1, cls.aut_order));
    table.orders[n] = a;
  }
  return table;
}

std::vector<BigRat> genus_coefficients(const IntegerPartition& pi, int h,
                                       int n_max, int workers) {
  check_capacity(pi, n_max);
  if (h < 0) throw domain_error("genus_coefficients: genus must be nonnegative");
  MapFilters filters;
  filters.genus = h;
  filters.broken_partition = pi;
  std::vector<BigRat> out(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    BigRat sum = 0;
    if (pi.sum() <= n + 1)
      for (const MapClass& cls : enumerate_maps(n, pi.sum(), filters, workers))
        sum += BigRat(1, cls.aut_order);
    out[n] = sum;
  }
  return out;
}

std::complex<double> evaluate_series(const CoefficientTable& table,
                                     std::complex<double> lambda, double N,
                                     int n_trunc) {
  if (n_trunc < 0 || n_trunc > table.n_max())
    throw domain_error("evaluate_series: truncation exceeds table order");
  std::complex<double> sum = 0.0;
  std::complex<double> power = 1.0;  // (-lambda)^m
  for (int m = 0; m <= n_trunc; ++m) {
    sum += power * table.orders[m].eval(std::complex<double>(N, 0.0));
    power *= -lambda;
  }
  return sum;
}

std::complex<double> cumulant_tensor_entry(
    const IntegerPartition& pi, std::complex<double> scalar,
    const std::vector<std::array<int, 4>>& indices) {
  return cumulant_tensor_entry(pi, scalar, indices,
                               Permutation::identity(pi.sum()),
                               block_cycles(pi).inverse());
}

std::complex<double> cumulant_tensor_entry(
    const IntegerPartition& pi, std::complex<double> scalar,
    const std::vector<std::array<int, 4>>& indices, const Permutation& tau,
    const Permutation& xi) {
  int k = pi.sum();
  if (k > 3) throw capacity_error("cumulant_tensor_entry: sum(pi) capped at 3");
  if (static_cast<int>(indices.size()) != k)
    throw domain_error("cumulant_tensor_entry: need one index tuple per cilium");
  if (tau.size() != k || xi.size() != k ||
      !(tau.compose(xi.inverse()).cycle_type() == pi))
    throw domain_error("cumulant_tensor_entry: tau xi^{-1} must have type pi");
  long long matches = 0;
  for (const Permutation& rho : symmetric_group(k)) {
    for (const Permutation& sigma : symmetric_group(k)) {
      Permutation sigma_inv = sigma.inverse();
      Permutation phi = rho.compose(tau).compose(sigma_inv);
      Permutation psi = rho.compose(xi).compose(sigma_inv);
      bool all = true;
      for (int l = 0; l < k && all; ++l)
        all = indices[l][2] == indices[phi(l)][0] &&
              indices[l][3] == indices[psi(l)][1];
      if (all) ++matches;
    }
  }
  return scalar * static_cast<double>(matches);
}

}  // namespace lvelab
