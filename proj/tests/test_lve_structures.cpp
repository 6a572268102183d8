#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lvelab/lve_graph.hpp"
#include "lvelab/ribbon_map.hpp"

using namespace lvelab;

namespace {

/* Builds an LVE graph from an abstract multigraph: edge i gets darts 2i and
   2i+1, rotations list incident darts in index order (irrelevant for Hepp
   weights and covariances). */
LveGraph graph_with_tree(int v, const std::vector<std::pair<int, int>>& edges,
                         std::vector<int> tree) {
  std::vector<std::vector<int>> rot(v);
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < edges.size(); ++i) {
    rot[edges[i].first].push_back(2 * static_cast<int>(i));
    rot[edges[i].second].push_back(2 * static_cast<int>(i) + 1);
    pairs.push_back({2 * static_cast<int>(i), 2 * static_cast<int>(i) + 1});
  }
  std::vector<int> loops;
  std::sort(tree.begin(), tree.end());
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (!std::binary_search(tree.begin(), tree.end(), i)) loops.push_back(i);
  return LveGraph(RibbonMap(rot, pairs, {}), tree, loops);
}

/* All spanning-tree edge subsets of the multigraph, by union-find. */
std::vector<std::vector<int>> spanning_trees(int v,
                                             const std::vector<std::pair<int, int>>& edges) {
  int e = static_cast<int>(edges.size());
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << e); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != v - 1) continue;
    std::vector<int> parent(v);
    for (int i = 0; i < v; ++i) parent[i] = i;
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    bool ok = true;
    for (int i = 0; i < e && ok; ++i) {
      if (!(mask & (1 << i))) continue;
      int ra = find(edges[i].first), rb = find(edges[i].second);
      if (ra == rb)
        ok = false;
      else
        parent[ra] = rb;
    }
    if (!ok) continue;
    std::vector<int> tree;
    for (int i = 0; i < e; ++i)
      if (mask & (1 << i)) tree.push_back(i);
    out.push_back(tree);
  }
  return out;
}

bool multigraph_connected(int v, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(v);
  for (int i = 0; i < v; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  int root = find(0);
  for (int i = 1; i < v; ++i)
    if (find(i) != root) return false;
  return true;
}

/* Calls fn on every connected multigraph (loops and parallel edges allowed)
   with exactly v labeled vertices and e edges. */
void for_each_connected_multigraph(
    int v, int e, const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < v; ++i)
    for (int j = i; j < v; ++j) slots.push_back({i, j});
  std::vector<std::pair<int, int>> chosen;
  std::function<void(int, int)> rec = [&](int from, int left) {
    if (left == 0) {
      if (multigraph_connected(v, chosen)) fn(chosen);
      return;
    }
    for (int s = from; s < static_cast<int>(slots.size()); ++s) {
      chosen.push_back(slots[s]);
      rec(s, left - 1);
      chosen.pop_back();
    }
  };
  rec(0, e);
}

}  // namespace

TEST_CASE("tree counts match hand values") {
  CHECK(count_lve_trees(0, 0) == 1);
  CHECK(count_lve_trees(0, 1) == 1);
  CHECK(count_lve_trees(0, 2) == 0);
  CHECK(count_lve_trees(1, 1) == 2);
  CHECK(count_lve_trees(2, 1) == 12);
  CHECK(count_lve_trees(2, 2) == 15);
  CHECK(count_lve_trees(5, 1) == 30240);
  CHECK(count_lve_trees(3, 7) == 0);
  CHECK_THROWS_AS(count_lve_trees(-1, 0), domain_error);
}

TEST_CASE("graph counts match hand values") {
  CHECK(count_lve_graphs(0, 1, 1) == 1);
  CHECK(count_lve_graphs(1, 1, 1) == 12);
  CHECK(count_lve_graphs(1, 1, 0) == 3);
  CHECK(count_lve_graphs(0, 0, 0) == 1);
  CHECK(count_lve_graphs(2, 0, 1) == count_lve_trees(2, 1));
  CHECK(count_lve_graphs(3, 0, 2) == count_lve_trees(3, 2));
  CHECK(count_lve_graphs(1, 0, 3) == 0);
  CHECK_THROWS_AS(count_lve_graphs(0, 2, 0), domain_error);
}

TEST_CASE("tree enumeration matches the counting formula") {
  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; k <= n + 2; ++k) {
      auto trees = enumerate_lve_trees(n, k);
      CHECK(BigInt(trees.size()) == count_lve_trees(n, k));
      std::set<std::string> seen;
      for (const auto& t : trees) {
        CHECK(t.is_tree());
        CHECK(t.map().edge_count() == n);
        CHECK(t.map().cilium_count() == k);
        CHECK(t.map().genus() == 0);
        seen.insert(t.to_json());
      }
      CHECK(seen.size() == trees.size());
    }
  }
  CHECK_THROWS_AS(enumerate_lve_trees(7, 1), capacity_error);
}

TEST_CASE("hand-checked tree examples") {
  auto two = enumerate_lve_trees(1, 1);
  REQUIRE(two.size() == 2);
  // the cilium sits on one endpoint or the other
  std::set<int> cilium_vertex;
  for (const auto& t : two)
    cilium_vertex.insert(t.map().vertex_of(t.map().cilia()[0]));
  CHECK(cilium_vertex == std::set<int>{0, 1});

  auto single = enumerate_lve_trees(0, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].map().dart_count() == 1);
  CHECK(single[0].map().vertex_count() == 1);

  CHECK(enumerate_lve_trees(2, 1).size() == 12);
}

TEST_CASE("graph enumeration matches the counting formula") {
  for (int total = 0; total <= 3; ++total) {
    for (int nt = 0; nt <= total; ++nt) {
      int nl = total - nt;
      for (int k = (nt == 0 && nl > 0) ? 1 : 0; k <= nt + 1; ++k) {
        auto graphs = enumerate_lve_graphs(nt, nl, k);
        CHECK(BigInt(graphs.size()) == count_lve_graphs(nt, nl, k));
        std::set<std::string> seen;
        for (const auto& g : graphs) {
          CHECK(g.loop_count() == nl);
          CHECK(static_cast<int>(g.tree_edges().size()) == nt);
          CHECK(g.map().cilium_count() == k);
          seen.insert(g.to_json());
        }
        CHECK(seen.size() == graphs.size());
      }
    }
  }
  CHECK_THROWS_AS(enumerate_lve_graphs(3, 2, 1), capacity_error);
}

TEST_CASE("streaming enumeration agrees with the materialized one") {
  for (int nt = 0; nt <= 2; ++nt) {
    for (int nl = 0; nl <= 2; ++nl) {
      int k = 1;
      auto vec = enumerate_lve_graphs(nt, nl, k);
      std::vector<std::string> streamed;
      long long count =
          for_each_lve_graph(nt, nl, k, [&](const LveGraph& g) { streamed.push_back(g.to_json()); });
      CHECK(count == static_cast<long long>(vec.size()));
      REQUIRE(streamed.size() == vec.size());
      for (size_t i = 0; i < vec.size(); ++i) CHECK(streamed[i] == vec[i].to_json());
    }
  }
}

TEST_CASE("lve graph validation") {
  auto trees = enumerate_lve_trees(2, 1);
  const RibbonMap& m = trees[0].map();
  CHECK_THROWS_AS(LveGraph(m, {0}, {1}), domain_error);       // tree too small
  CHECK_THROWS_AS(LveGraph(m, {0, 0}, {}), domain_error);     // duplicate
  CHECK_THROWS_AS(LveGraph(m, {1, 0}, {}), domain_error);     // unsorted
  CHECK_THROWS_AS(LveGraph(m, {0, 1}, {0}), domain_error);    // loop reuses tree edge
  CHECK_THROWS_AS(LveGraph(m, {0, 5}, {}), domain_error);     // out of range
  CHECK_NOTHROW(LveGraph(m, {0, 1}, {}));

  // a double edge: tree must pick exactly one of the two parallel edges
  RibbonMap dbl({{0, 2}, {1, 3}}, {{0, 1}, {2, 3}}, {});
  CHECK_NOTHROW(LveGraph(dbl, {0}, {1}));
  CHECK_NOTHROW(LveGraph(dbl, {1}, {0}));
  CHECK_THROWS_AS(LveGraph(dbl, {0, 1}, {}), domain_error);   // cycle in tree
}

TEST_CASE("grow loops with the order stop") {
  // smallest case: single ciliated vertex, stop at one edge
  auto seed = enumerate_lve_trees(0, 1)[0];
  auto r1 = grow_loops(seed, GrowStop{1, std::nullopt});
  REQUIRE(r1.retained.size() == 1);
  CHECK(r1.retained[0] == seed);
  CHECK(BigInt(r1.frontier.size()) == count_lve_graphs(0, 1, 1));

  // two steps: retained = {seed, 1-loop graphs}, frontier = 2-loop graphs
  auto r2 = grow_loops(seed, GrowStop{2, std::nullopt});
  CHECK(BigInt(r2.retained.size()) == 1 + count_lve_graphs(0, 1, 1));
  CHECK(BigInt(r2.frontier.size()) == count_lve_graphs(0, 2, 1));

  // summed over all tree seeds, growth reproduces the graph counts
  for (int nt = 0; nt <= 2; ++nt) {
    for (int k = 1; k <= nt + 1; ++k) {
      int max_edges = 3;
      std::map<int, long long> by_loops;
      for (const auto& t : enumerate_lve_trees(nt, k)) {
        auto r = grow_loops(t, GrowStop{max_edges, std::nullopt});
        for (const auto& g : r.retained) by_loops[g.loop_count()] += 1;
        for (const auto& g : r.frontier) by_loops[g.loop_count()] += 1;
      }
      for (int j = 0; j <= max_edges - nt; ++j)
        CHECK(BigInt(by_loops[j]) == count_lve_graphs(nt, j, k));
    }
  }
}

TEST_CASE("grow loops with the genus stop") {
  auto seed = enumerate_lve_trees(0, 1)[0];
  auto r = grow_loops(seed, GrowStop{2, 0});
  // frontier graphs have genus 1 dropping to 0 when the last loop is removed
  for (const auto& g : r.frontier) {
    CHECK(g.map().genus() == 1);
    int dart = g.map().pairs()[g.loop_order().back()].first;
    CHECK(g.map().remove_edge(dart).genus() == 0);
  }
  for (const auto& g : r.retained) CHECK(g.map().genus() == 0);

  // at two edges on one ciliated vertex the genus-1 graphs are exactly the
  // crossing configurations; check the split against a direct filter
  long long planar2 = 0, genus12 = 0;
  for_each_lve_graph(0, 2, 1, [&](const LveGraph& g) {
    (g.map().genus() == 0 ? planar2 : genus12) += 1;
  });
  long long retained2 = 0, frontier2 = 0;
  for (const auto& g : r.retained)
    if (g.map().edge_count() == 2) retained2 += 1;
  for (const auto& g : r.frontier)
    if (g.map().edge_count() == 2) frontier2 += 1;
  CHECK(retained2 == planar2);
  CHECK(frontier2 == genus12);

  // a frontier seed is returned as frontier without expansion
  REQUIRE(!r.frontier.empty());
  auto again = grow_loops(r.frontier[0], GrowStop{3, 0});
  CHECK(again.retained.empty());
  REQUIRE(again.frontier.size() == 1);
  CHECK(again.frontier[0] == r.frontier[0]);
}

TEST_CASE("grow loops validation") {
  auto seed = enumerate_lve_trees(0, 1)[0];
  CHECK_THROWS_AS(grow_loops(seed, GrowStop{6, std::nullopt}), capacity_error);
  CHECK_THROWS_AS(grow_loops(seed, GrowStop{2, -1}), domain_error);
  auto one = grow_loops(seed, GrowStop{1, std::nullopt}).frontier[0];
  CHECK_THROWS_AS(grow_loops(one, GrowStop{0, std::nullopt}), domain_error);
}

TEST_CASE("tree covariance on a path") {
  // path 0-1-2 with t01 = 0.5, t12 = 0.8
  auto g = graph_with_tree(3, {{0, 1}, {1, 2}}, {0, 1});
  auto c = tree_covariance(g, {0.5, 0.8});
  CHECK(c[0][0] == doctest::Approx(1.0));
  CHECK(c[0][1] == doctest::Approx(0.5));
  CHECK(c[1][2] == doctest::Approx(0.8));
  CHECK(c[0][2] == doctest::Approx(0.5));
  CHECK(c[2][0] == doctest::Approx(0.5));

  auto ones = tree_covariance(g, {1.0, 1.0});
  auto zeros = tree_covariance(g, {0.0, 0.0});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(ones[i][j] == doctest::Approx(1.0));
      CHECK(zeros[i][j] == doctest::Approx(i == j ? 1.0 : 0.0));
    }

  auto loop = graph_with_tree(2, {{0, 1}, {0, 1}}, {0});
  CHECK_THROWS_AS(tree_covariance(loop, {0.5}), domain_error);
  CHECK_THROWS_AS(tree_covariance(g, {0.5}), domain_error);
  CHECK_THROWS_AS(tree_covariance(g, {0.5, 1.5}), domain_error);
}

TEST_CASE("tree covariance is positive semidefinite") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    int v = 2 + static_cast<int>(rng() % 5);
    // random labeled tree: attach each vertex to a random earlier one
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < v; ++i) edges.push_back({static_cast<int>(rng() % i), i});
    std::vector<int> tree(edges.size());
    std::iota(tree.begin(), tree.end(), 0);
    auto g = graph_with_tree(v, edges, tree);
    std::vector<double> t(edges.size());
    for (auto& x : t) x = unif(rng);
    auto c = tree_covariance(g, t);
    Eigen::MatrixXd m(v, v);
    for (int i = 0; i < v; ++i)
      for (int j = 0; j < v; ++j) m(i, j) = c[i][j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    CHECK(es.eigenvalues().minCoeff() >= -1e-12);
  }
}

TEST_CASE("hepp weights on hand-checked examples") {
  // a tree is the only spanning tree
  auto path = graph_with_tree(3, {{0, 1}, {1, 2}}, {0, 1});
  CHECK(hepp_weight(path) == BigRat(1));

  // triangle: each spanning tree dominates in a third of the sectors
  std::vector<std::pair<int, int>> tri = {{0, 1}, {1, 2}, {0, 2}};
  for (auto tree : spanning_trees(3, tri))
    CHECK(hepp_weight(graph_with_tree(3, tri, tree)) == BigRat(1, 3));

  // double edge: either tree wins half the sectors
  std::vector<std::pair<int, int>> dbl = {{0, 1}, {0, 1}};
  CHECK(hepp_weight(graph_with_tree(2, dbl, {0})) == BigRat(1, 2));
  CHECK(hepp_weight(graph_with_tree(2, dbl, {1})) == BigRat(1, 2));

  // a self-loop never enters the greedy tree
  auto lollipop = graph_with_tree(2, {{0, 1}, {1, 1}}, {0});
  CHECK(hepp_weight(lollipop) == BigRat(1));
}

TEST_CASE("hepp weights sum to one over spanning trees") {
  for (int e = 0; e <= 4; ++e) {
    for (int v = 1; v <= e + 1; ++v) {
      for_each_connected_multigraph(v, e, [&](const std::vector<std::pair<int, int>>& edges) {
        BigRat sum = 0;
        for (const auto& tree : spanning_trees(v, edges))
          sum += hepp_weight(graph_with_tree(v, edges, tree));
        CHECK(sum == BigRat(1));
      });
    }
  }
}

TEST_CASE("bkar verifier returns zero residuals") {
  using Poly = std::map<std::vector<int>, BigRat>;

  // n = 2, phi(x) = x: the fundamental theorem of calculus case
  CHECK(bkar_verify(2, Poly{{{1}, BigRat(1)}}) == BigRat(0));
  // constants: only the empty forest contributes
  CHECK(bkar_verify(2, Poly{{{0}, BigRat(7, 3)}}) == BigRat(0));
  CHECK(bkar_verify(3, Poly{{{0, 0, 0}, BigRat(5)}}) == BigRat(0));
  // n = 3, phi = x01 x12 + x02^2 (x12 x23 + x13^2 in 0-based names)
  CHECK(bkar_verify(3, Poly{{{1, 0, 1}, BigRat(1)}, {{0, 2, 0}, BigRat(1)}}) == BigRat(0));
  // all variables at once
  CHECK(bkar_verify(3, Poly{{{1, 1, 1}, BigRat(2)}, {{2, 0, 0}, BigRat(-3)}}) == BigRat(0));

  // random polynomials of total degree <= 4
  std::mt19937 rng(99);
  for (int rep = 0; rep < 50; ++rep) {
    int n = 2 + static_cast<int>(rng() % 2);
    int nvars = n * (n - 1) / 2;
    Poly phi;
    for (int terms = 0; terms < 4; ++terms) {
      std::vector<int> e(nvars, 0);
      int degree = static_cast<int>(rng() % 5);
      for (int d = 0; d < degree; ++d) e[rng() % nvars] += 1;
      phi[e] += BigRat(static_cast<int>(rng() % 19) - 9);
    }
    CHECK(bkar_verify(n, phi) == BigRat(0));
  }

  CHECK_THROWS_AS(bkar_verify(4, Poly{}), capacity_error);
  CHECK_THROWS_AS(bkar_verify(2, Poly{{{5}, BigRat(1)}}), capacity_error);
  CHECK_THROWS_AS(bkar_verify(2, Poly{{{1, 0}, BigRat(1)}}), domain_error);
}

TEST_CASE("lve graph json round trip") {
  for (const auto& g : enumerate_lve_graphs(1, 1, 1)) {
    auto back = LveGraph::from_json(g.to_json());
    CHECK(back == g);
  }
}
