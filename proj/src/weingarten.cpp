#include "lvelab/weingarten.hpp"

#include <mutex>

namespace lvelab {

namespace {

/* Solves M x = rhs over Q(N) for a square matrix of integer polynomials via
   Bareiss fraction-free elimination followed by back substitution. */
std::vector<RationalFunctionN> solve_poly_system(std::vector<std::vector<PolyZ>> m,
                                                 std::vector<PolyZ> rhs) {
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) m[i].push_back(rhs[i]);
  PolyZ prev(1);
  for (int k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) throw invariant_error("singular class matrix");
      std::swap(m[k], m[swap_row]);
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j <= n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
      m[i][k] = PolyZ();
    }
    prev = m[k][k];
  }
  std::vector<RationalFunctionN> x(n);
  for (int i = n - 1; i >= 0; --i) {
    RationalFunctionN acc(m[i][n], PolyZ(1));
    for (int j = i + 1; j < n; ++j)
      acc = acc - RationalFunctionN(m[i][j], PolyZ(1)) * x[j];
    x[i] = acc / RationalFunctionN(m[i][i], PolyZ(1));
  }
  return x;
}

struct WgTable {
  std::vector<IntegerPartition> classes;
  std::map<IntegerPartition, RationalFunctionN> wg;
};

WgTable build_table(int k) {
  WgTable t;
  t.classes = partitions_of(k);
  const int nc = static_cast<int>(t.classes.size());
  std::map<IntegerPartition, int> class_index;
  for (int i = 0; i < nc; ++i) class_index[t.classes[i]] = i;

  std::vector<Permutation> reps;
  reps.reserve(nc);
  for (const auto& p : t.classes) reps.push_back(representative(p));

  // M[e][d] = sum over tau of class d of N^{cycles(tau * rep_e^{-1})}
  std::vector<std::vector<std::vector<BigInt>>> counts(
      nc, std::vector<std::vector<BigInt>>(nc, std::vector<BigInt>(k + 1)));
  std::vector<Permutation> rep_inv;
  for (const auto& r : reps) rep_inv.push_back(r.inverse());
  for (const auto& tau : symmetric_group(k)) {
    int d = class_index.at(tau.cycle_type());
    for (int e = 0; e < nc; ++e) {
      int cyc = tau.compose(rep_inv[e]).cycle_count();
      counts[e][d][cyc] += 1;
    }
  }
  std::vector<std::vector<PolyZ>> m(nc, std::vector<PolyZ>(nc));
  for (int e = 0; e < nc; ++e)
    for (int d = 0; d < nc; ++d) m[e][d] = PolyZ(counts[e][d]);

  std::vector<PolyZ> rhs(nc);
  IntegerPartition id_class(std::vector<int>(k, 1));
  rhs[class_index.at(id_class)] = PolyZ(1);

  auto sol = solve_poly_system(std::move(m), std::move(rhs));
  for (int d = 0; d < nc; ++d) t.wg[t.classes[d]] = sol[d];
  return t;
}

const WgTable& table_for(int k) {
  static std::mutex mu;
  static std::map<int, WgTable> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(k);
  if (it == tables.end()) it = tables.emplace(k, build_table(k)).first;
  return it->second;
}

}  // namespace

const RationalFunctionN& weingarten(const IntegerPartition& cycle_type) {
  int k = cycle_type.sum();
  if (k < 1) throw domain_error("weingarten: empty cycle type");
  if (k > kWeingartenKMax) throw capacity_error("weingarten: k exceeds configured k_max");
  return table_for(k).wg.at(cycle_type);
}

RationalFunctionN haar_moment(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& c, const std::vector<int>& d) {
  if (a.size() != b.size() || c.size() != d.size())
    throw domain_error("haar_moment: index lists of unequal length");
  if (a.size() != c.size())
    throw domain_error("haar_moment: unequal numbers of U and U* factors");
  const int k = static_cast<int>(a.size());
  if (k == 0) return RationalFunctionN(1);
  if (k > kWeingartenKMax) throw capacity_error("haar_moment: k exceeds configured k_max");

  const auto& tab = table_for(k);
  std::map<IntegerPartition, BigInt> hits;
  auto group = symmetric_group(k);
  std::vector<int> col_match;
  for (int s = 0; s < static_cast<int>(group.size()); ++s) {
    bool cols_ok = true;
    for (int i = 0; i < k && cols_ok; ++i) cols_ok = (b[group[s](i)] == d[i]);
    if (cols_ok) col_match.push_back(s);
  }
  for (const auto& tau : group) {
    bool rows_ok = true;
    for (int i = 0; i < k && rows_ok; ++i) rows_ok = (a[tau(i)] == c[i]);
    if (!rows_ok) continue;
    for (int s : col_match) hits[tau.compose(group[s].inverse()).cycle_type()] += 1;
  }
  RationalFunctionN acc;
  for (const auto& [cls, cnt] : hits)
    acc = acc + tab.wg.at(cls) * RationalFunctionN(PolyZ(cnt), PolyZ(1));
  return acc;
}

std::map<IntegerPartition, RationalFunctionN> trace_invariant_coeffs(
    int k, int dim, const std::map<std::vector<int>, BigRat>& coeff_tensor) {
  if (k < 1) throw domain_error("trace_invariant_coeffs: k must be positive");
  if (k > kWeingartenKMax)
    throw capacity_error("trace_invariant_coeffs: k exceeds configured k_max");
  if (dim <= k) throw domain_error("trace_invariant_coeffs: need dim > k");
  for (const auto& [idx, v] : coeff_tensor) {
    if (static_cast<int>(idx.size()) != 2 * k)
      throw domain_error("trace_invariant_coeffs: tensor index arity mismatch");
    for (int x : idx)
      if (x < 0 || x >= dim) throw domain_error("trace_invariant_coeffs: index out of range");
    (void)v;
  }

  auto group = symmetric_group(k);
  const int ng = static_cast<int>(group.size());

  // v[tau] = sum over p in [dim]^k of A[p1, p_tau(1), .., pk, p_tau(k)]
  // computed from the sparse support: entry contributes to tau iff its index
  // tuple has the matching delta pattern.
  std::vector<BigRat> v(ng, BigRat(0));
  for (int t = 0; t < ng; ++t) {
    const auto& tau = group[t];
    for (const auto& [idx, val] : coeff_tensor) {
      bool match = true;
      for (int i = 0; i < k && match; ++i) match = (idx[2 * i + 1] == idx[2 * tau(i)]);
      if (match) v[t] += val;
    }
  }

  // P_pi = sum over sigma of class pi and all tau of v_tau Wg(tau sigma^-1)
  // evaluated at the tensor's own dimension; the result is independent of dim
  // for dim > k, where the delta patterns are linearly independent.
  const auto& tab = table_for(k);
  std::map<IntegerPartition, BigRat> wg_at_dim;
  for (const auto& cls : tab.classes) wg_at_dim[cls] = tab.wg.at(cls).eval(BigInt(dim));
  std::vector<Permutation> inv_group;
  inv_group.reserve(ng);
  for (const auto& g : group) inv_group.push_back(g.inverse());

  std::map<IntegerPartition, BigRat> p_by_class;
  for (const auto& cls : tab.classes) p_by_class[cls] = 0;
  for (int s = 0; s < ng; ++s) {
    BigRat acc = 0;
    for (int t = 0; t < ng; ++t) {
      if (v[t] == 0) continue;
      acc += wg_at_dim.at(group[t].compose(inv_group[s]).cycle_type()) * v[t];
    }
    p_by_class[group[s].cycle_type()] += acc;
  }

  std::map<IntegerPartition, RationalFunctionN> out;
  for (const auto& [cls, val] : p_by_class) out[cls] = RationalFunctionN::from_rat(val);
  return out;
}

}  // namespace lvelab
