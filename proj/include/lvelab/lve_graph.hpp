#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lvelab/polynomial.hpp"
#include "lvelab/ribbon_map.hpp"

namespace lvelab {

/* Ribbon map with a distinguished spanning tree and a total order on the
   remaining (loop) edges.  Edges are identified by their index into
   map.pairs(); tree_edges is sorted, loop_order lists the loop edges in
   insertion order, so loop_order.back() is the last loop edge. */
class LveGraph {
public:
  LveGraph(RibbonMap map, std::vector<int> tree_edges, std::vector<int> loop_order);

  const RibbonMap& map() const { return map_; }
  const std::vector<int>& tree_edges() const { return tree_edges_; }
  const std::vector<int>& loop_order() const { return loop_order_; }
  int loop_count() const { return static_cast<int>(loop_order_.size()); }
  bool is_tree() const { return loop_order_.empty(); }

  std::string to_json() const;
  static LveGraph from_json(const std::string& text);

  bool operator==(const LveGraph& o) const {
    return map_ == o.map_ && tree_edges_ == o.tree_edges_ && loop_order_ == o.loop_order_;
  }

private:
  RibbonMap map_;
  std::vector<int> tree_edges_;
  std::vector<int> loop_order_;
};

/* Number of vertex-labeled corner-resolved ciliated plane trees with n edges
   and k cilia: (2n+k-1)! (n+1)! / ((n+k)! (n+1-k)! k!).  Returns 0 when
   k > n+1.  The ciliumless single vertex (n = 0, k = 0) counts as 1. */
BigInt count_lve_trees(int n, int k);

/* Number of LVE graphs with n_tree tree edges, n_loop ordered loop edges and
   k cilia: (2n'+2n''+k-1)! (n'+1)! / ((n'+k)! 2^{n''} k! (n'+1-k)!).  The
   formula requires a cilium or a tree edge; n_tree = 0, k = 0 with loops is
   a domain_error.  Returns 0 when k > n_tree+1. */
BigInt count_lve_graphs(int n_tree, int n_loop, int k);

/* All vertex-labeled ciliated plane trees with n edges and k cilia, each
   exactly once; capacity n <= 6. */
std::vector<LveGraph> enumerate_lve_trees(int n, int k);

/* All LVE graphs obtained from the trees by inserting n_loop ordered loop
   edges into corners; capacity n_tree + n_loop <= 4 (the population grows
   like (2E)!, so larger totals must be streamed). */
std::vector<LveGraph> enumerate_lve_graphs(int n_tree, int n_loop, int k);

/* Streaming form of the same enumeration without the materialization cap:
   calls sink once per graph and returns how many were produced.  Capacity
   n_tree <= 6 on the tree part. */
long long for_each_lve_graph(int n_tree, int n_loop, int k,
                             const std::function<void(const LveGraph&)>& sink);

/* Work-splitting variant: only expands tree seeds whose running index is
   congruent to offset modulo stride, so stride disjoint calls cover the
   full enumeration exactly once. */
long long for_each_lve_graph_strided(int n_tree, int n_loop, int k, int stride, int offset,
                                     const std::function<void(const LveGraph&)>& sink);

/* Stop rule for loop growth: expansion never exceeds max_edges total edges;
   when max_genus is set, graphs whose genus reaches max_genus+1 join the
   frontier and are not expanded further. */
struct GrowStop {
  int max_edges = 0;
  std::optional<int> max_genus;
};

/* retained: graphs kept by the expansion (all edge counts strictly below
   max_edges in order mode; genus <= max_genus in genus mode).  frontier:
   the graphs at which expansion stopped (edge count = max_edges in order
   mode; genus = max_genus+1 in genus mode). */
struct GrowResult {
  std::vector<LveGraph> retained;
  std::vector<LveGraph> frontier;
};

/* Expands the seed by repeated loop insertion under the stop rule;
   capacity max_edges <= 5 (the bare-vertex seed already yields about
   10^5 graphs there). */
GrowResult grow_loops(const LveGraph& seed, const GrowStop& stop);

/* Covariance of the weakened tree measure: entry (i,j) is the smallest t
   over the tree path from vertex i to vertex j, 1 on the diagonal.  t is
   aligned with tree.tree_edges(); values must lie in [0,1]. */
std::vector<std::vector<double>> tree_covariance(const LveGraph& tree,
                                                 const std::vector<double>& t);

/* Fraction of the |E|! Hepp sectors whose greedy leading spanning tree
   (edges accepted in decreasing sector order unless they close a cycle)
   is exactly the distinguished tree; capacity |E| <= 7. */
BigRat hepp_weight(const LveGraph& g);

/* Checks the forest formula on n = 2 or 3 points for a polynomial phi in
   the C(n,2) edge variables (exponent vector -> coefficient, total degree
   <= 4): returns |phi(1,..,1) - forest sum|, exactly 0 when the formula
   holds.  All integrals are evaluated in closed form over ordering
   sub-simplices. */
BigRat bkar_verify(int n, const std::map<std::vector<int>, BigRat>& phi);

}  // namespace lvelab
