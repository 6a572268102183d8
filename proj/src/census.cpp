#include "lvelab/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "lvelab/lve_graph.hpp"
#include "lvelab/parallel.hpp"

namespace lvelab {

IntegerPartition broken_face_partition(const RibbonMap& m) {
  auto f = m.faces();
  std::vector<int> parts;
  for (int c : f.cilia_count)
    if (c > 0) parts.push_back(c);
  return IntegerPartition(parts);
}

std::vector<MapClass> enumerate_maps(int n, int k, const MapFilters& filters, int workers) {
  if (n < 0 || k < 0) throw domain_error("enumerate_maps needs n, k >= 0");
  if (n > 6) throw capacity_error("map census capped at n <= 6 edges");
  if (k > n + 1) throw capacity_error("a connected map with n edges holds at most n+1 cilia");
  if (filters.broken_partition && filters.broken_partition->sum() != k)
    throw domain_error("broken-face filter must be a partition of k");

  // every connected map arises from some spanning tree plus ordered loop
  // edges, so streaming the LVE enumeration and deduplicating by canonical
  // encoding visits every isomorphism class
  constexpr int kStride = 8;
  int chunk_count = (n + 1) * kStride;
  std::vector<std::unordered_map<std::string, MapClass>> locals(chunk_count);
  run_chunks(chunk_count, resolve_workers(workers), [&](int chunk) {
    int n_tree = chunk / kStride;
    int offset = chunk % kStride;
    if (k > n_tree + 1) return;
    auto& local = locals[chunk];
    for_each_lve_graph_strided(n_tree, n - n_tree, k, kStride, offset,
                               [&](const LveGraph& g) {
                                 std::string key = g.map().canonical_encoding();
                                 auto it = local.find(key);
                                 if (it != local.end()) return;
                                 MapClass cls{g.map().canonical_form(),
                                              g.map().aut_order()};
                                 local.emplace(std::move(key), std::move(cls));
                               });
  });

  std::map<std::string, MapClass> merged;
  for (auto& local : locals)
    for (auto& [key, cls] : local) merged.emplace(std::move(key), std::move(cls));

  std::vector<MapClass> out;
  out.reserve(merged.size());
  for (auto& [key, cls] : merged) {
    if (filters.genus && cls.map.genus() != *filters.genus) continue;
    if (filters.broken_partition &&
        !(broken_face_partition(cls.map) == *filters.broken_partition))
      continue;
    out.push_back(std::move(cls));
  }
  return out;
}

long long adjacency_aut_order(const RibbonMap& m) {
  int v = m.vertex_count();
  std::vector<std::vector<int>> mult(v, std::vector<int>(v, 0));
  for (auto [a, b] : m.pairs()) mult[m.vertex_of(a)][m.vertex_of(b)] += 1;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) {
      mult[i][j] += mult[j][i];
      mult[j][i] = mult[i][j];
    }
  std::vector<int> cil(v, 0);
  for (int d : m.cilia()) cil[m.vertex_of(d)] = 1;

  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  long long order = 0;
  do {
    bool ok = true;
    for (int i = 0; i < v && ok; ++i) {
      if (cil[perm[i]] != cil[i]) ok = false;
      for (int j = i; j < v && ok; ++j)
        if (mult[perm[i]][perm[j]] != mult[i][j]) ok = false;
    }
    if (ok) ++order;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return order;
}

std::vector<CensusRow> census_table(int n, int k, int workers) {
  auto classes = enumerate_maps(n, k, {}, workers);
  std::map<std::tuple<int, int, IntegerPartition>, CensusRow> rows;
  for (const auto& cls : classes) {
    int g = cls.map.genus();
    auto part = broken_face_partition(cls.map);
    int b = part.size();
    auto& row = rows[{g, b, part}];
    if (row.count == 0) {
      row.n = n;
      row.k = k;
      row.genus = g;
      row.broken = b;
      row.partition = part;
    }
    row.count += 1;
    if (n <= 4 && adjacency_aut_order(cls.map) != cls.aut_order) row.aut_mismatch += 1;
  }
  std::vector<CensusRow> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "n,k,g,b,partition,count,aut_mismatch\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.k << ',' << r.genus << ',' << r.broken << ','
       << r.partition.str() << ',' << r.count << ',' << r.aut_mismatch << '\n';
  return os.str();
}

}  // namespace lvelab
