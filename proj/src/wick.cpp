#include <algorithm>
#include <numeric>
#include <vector>

#include "lvelab/coefficients.hpp"
#include "lvelab/errors.hpp"

namespace lvelab {

namespace {

/* One index slot of a matrix entry: either a fixed external value or a
   summation variable introduced by a quartic vertex. */
struct Slot {
  bool fixed = false;
  int id = 0;  // external value when fixed, else variable index
};

/* A Gaussian field entry M_{row col} or its conjugate. */
struct Factor {
  Slot row, col;
};

Slot fixed(int value) { return Slot{true, value}; }
Slot var(int id) { return Slot{false, id}; }

/* Union-find over summation variables with an optional pinned external
   value per class; merging two distinct pins kills the matching. */
struct IndexClasses {
  std::vector<int> parent;
  std::vector<int> pin;  // external value, -1 when free

  explicit IndexClasses(int vars) : parent(vars), pin(vars, -1) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  bool constrain(const Slot& a, const Slot& b) {
    if (a.fixed && b.fixed) return a.id == b.id;
    if (a.fixed) return constrain(b, a);
    int ra = find(a.id);
    if (b.fixed) {
      if (pin[ra] >= 0) return pin[ra] == b.id;
      pin[ra] = b.id;
      return true;
    }
    int rb = find(b.id);
    if (ra == rb) return true;
    if (pin[ra] >= 0 && pin[rb] >= 0 && pin[ra] != pin[rb]) return false;
    parent[rb] = ra;
    if (pin[ra] < 0) pin[ra] = pin[rb];
    return true;
  }

  int free_classes() {
    int count = 0;
    for (int x = 0; x < static_cast<int>(parent.size()); ++x)
      if (find(x) == x && pin[x] < 0) ++count;
    return count;
  }
};

/* Gaussian expectation of the product of the listed entries by exhaustive
   Wick pairings; every pairing contributes N^{number of free index loops}. */
LaurentPolyN gaussian_moment(const std::vector<Factor>& ms,
                             const std::vector<Factor>& conj, int vars) {
  LaurentPolyN sum;
  if (ms.size() != conj.size()) return sum;
  std::vector<int> match(ms.size());
  std::iota(match.begin(), match.end(), 0);
  do {
    IndexClasses classes(vars);
    bool alive = true;
    for (std::size_t i = 0; i < ms.size() && alive; ++i)
      alive = classes.constrain(ms[i].row, conj[match[i]].row) &&
              classes.constrain(ms[i].col, conj[match[i]].col);
    if (alive) sum.add_term(classes.free_classes(), 1);
  } while (std::next_permutation(match.begin(), match.end()));
  return sum;
}

/* Truncated series in lambda with Laurent-in-N coefficients. */
using Series = std::vector<LaurentPolyN>;

Series series_mul(const Series& a, const Series& b) {
  Series out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j)
      out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

Series series_sub(const Series& a, const Series& b) {
  Series out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

/* Inverse of a series with constant term 1. */
Series series_inverse(const Series& d) {
  Series inv(d.size());
  inv[0].add_term(0, 1);
  for (std::size_t n = 1; n < d.size(); ++n) {
    LaurentPolyN acc;
    for (std::size_t j = 1; j <= n; ++j) acc = acc + d[j] * inv[n - j];
    inv[n] = -acc;
  }
  return inv;
}

/* Series of <product of externals x exp(-lambda Tr(MM*MM*)/(2N))> before
   normalization: order m inserts m quartic vertices, each expanding to
   M_ij M*_kj M_kl M*_il with fresh summation variables, weighted by
   (-1/2)^m / m! and N^{-m}. */
Series moment_series(const std::vector<Factor>& extern_ms,
                     const std::vector<Factor>& extern_conj, int orders) {
  Series out(orders + 1);
  BigRat weight = 1;
  for (int m = 0; m <= orders; ++m) {
    std::vector<Factor> ms = extern_ms;
    std::vector<Factor> conj = extern_conj;
    for (int v = 0; v < m; ++v) {
      int i = 4 * v, j = 4 * v + 1, k = 4 * v + 2, l = 4 * v + 3;
      ms.push_back({var(i), var(j)});
      ms.push_back({var(k), var(l)});
      conj.push_back({var(k), var(j)});
      conj.push_back({var(i), var(l)});
    }
    out[m] = (gaussian_moment(ms, conj, 4 * m) * weight) *
             LaurentPolyN::term(-m, 1);
    weight *= BigRat(-1, 2 * (m + 1));
  }
  return out;
}

}  // namespace

LaurentPolyN wick_oracle(const IntegerPartition& pi, int n) {
  int k = pi.sum();
  if (k < 1) throw domain_error("wick_oracle: pi must partition some k >= 1");
  if (k > 2) throw capacity_error("wick_oracle: sum(pi) capped at 2");
  if (n > 3) throw capacity_error("wick_oracle: order capped at 3");
  if (n < 0) throw domain_error("wick_oracle: order must be nonnegative");

  Series vacuum_inv = series_inverse(moment_series({}, {}, n));
  Series cumulant;
  if (k == 1) {
    /* K_{1212} = N <M_12 M*_12>_connected and the structure sum is a
       single delta product, so the scalar cumulant is the entry itself. */
    Series num = moment_series({{fixed(1), fixed(2)}},
                               {{fixed(1), fixed(2)}}, n);
    cumulant = series_mul(num, vacuum_inv);
  } else {
    /* Two source pairs at index values making exactly two (rho, sigma)
       terms of the structure sum survive: pairwise equal tuples isolate
       pi = (1,1), crossed column values isolate pi = (2).  The joint
       cumulant subtracts the two charge-allowed factorized moments. */
    Factor m1{fixed(1), fixed(2)}, m2{fixed(3), fixed(4)};
    Factor c1{fixed(1), fixed(2)}, c2{fixed(3), fixed(4)};
    if (pi.parts == std::vector<int>{2}) {
      c1 = {fixed(1), fixed(4)};
      c2 = {fixed(3), fixed(2)};
    }
    Series joint = series_mul(moment_series({m1, m2}, {c1, c2}, n), vacuum_inv);
    Series direct = series_mul(
        series_mul(moment_series({m1}, {c1}, n), vacuum_inv),
        series_mul(moment_series({m2}, {c2}, n), vacuum_inv));
    Series crossed = series_mul(
        series_mul(moment_series({m1}, {c2}, n), vacuum_inv),
        series_mul(moment_series({m2}, {c1}, n), vacuum_inv));
    cumulant = series_sub(series_sub(joint, direct), crossed);
    for (LaurentPolyN& order : cumulant) order = order * BigRat(1, 2);
  }
  /* The 2k source derivatives of log Z supply N^k, and a_{pi,n} is the
     coefficient of (-lambda)^n. */
  LaurentPolyN a = cumulant[n] * LaurentPolyN::term(k, 1);
  return n % 2 == 0 ? a : -a;
}

}  // namespace lvelab
