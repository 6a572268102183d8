#include "lvelab/lve_graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace lvelab {

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/* Mutable generation state: rotations are linear dart lists (the cyclic
   start is meaningful only as a scan origin for deduplication), edges are
   kept in creation order with the tree edges first. */
struct GenState {
  std::vector<std::vector<int>> rot;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> cilia;
  int n_tree = 0;
  int darts = 0;
};

LveGraph to_lve(const GenState& s) {
  RibbonMap map(s.rot, s.edges, s.cilia);
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < map.edge_count(); ++i) index[map.pairs()[i]] = i;
  auto edge_index = [&](std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return index.at(e);
  };
  std::vector<int> tree, loops;
  for (int i = 0; i < s.n_tree; ++i) tree.push_back(edge_index(s.edges[i]));
  for (size_t i = s.n_tree; i < s.edges.size(); ++i)
    loops.push_back(edge_index(s.edges[i]));
  std::sort(tree.begin(), tree.end());
  return LveGraph(std::move(map), std::move(tree), std::move(loops));
}

GenState from_lve(const LveGraph& g) {
  GenState s;
  s.rot = g.map().rotations();
  for (int e : g.tree_edges()) s.edges.push_back(g.map().pairs()[e]);
  for (int e : g.loop_order()) s.edges.push_back(g.map().pairs()[e]);
  s.cilia = g.map().cilia();
  s.n_tree = static_cast<int>(g.tree_edges().size());
  s.darts = g.map().dart_count();
  return s;
}

/* Decodes a Pruefer sequence over vertices 0..v-1 into the tree edge list. */
std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& seq, int v) {
  std::vector<int> degree(v, 1);
  for (int a : seq) degree[a] += 1;
  std::vector<std::pair<int, int>> edges;
  std::vector<char> used(v, 0);
  for (int a : seq) {
    for (int leaf = 0; leaf < v; ++leaf) {
      if (degree[leaf] == 1 && !used[leaf]) {
        edges.push_back({leaf, a});
        used[leaf] = 1;
        degree[a] -= 1;
        break;
      }
    }
  }
  std::vector<int> last;
  for (int i = 0; i < v; ++i)
    if (!used[i] && degree[i] == 1) last.push_back(i);
  edges.push_back({last[0], last[1]});
  return edges;
}

/* Calls sink for every corner-resolved ciliated plane tree state. */
void for_each_tree_state(int n, int k, const std::function<void(const GenState&)>& sink) {
  if (n < 0 || k < 0) throw domain_error("tree enumeration needs n, k >= 0");
  if (n > 6) throw capacity_error("tree enumeration capped at n <= 6");
  if (k > n + 1) return;
  int v = n + 1;

  if (n == 0) {
    GenState s;
    if (k == 0) {
      s.rot = {{}};
    } else {
      s.rot = {{0}};
      s.cilia = {0};
      s.darts = 1;
    }
    sink(s);
    return;
  }

  // iterate labeled trees via all Pruefer sequences
  std::vector<int> seq(std::max(v - 2, 0), 0);
  bool more = true;
  while (more) {
    auto tree_edges = pruefer_decode(seq, v);

    // darts 2j and 2j+1 belong to edge j
    std::vector<std::vector<int>> incident(v);
    for (int j = 0; j < n; ++j) {
      incident[tree_edges[j].first].push_back(2 * j);
      incident[tree_edges[j].second].push_back(2 * j + 1);
    }

    std::vector<std::pair<int, int>> tree_edges_as_darts;
    for (int j = 0; j < n; ++j) tree_edges_as_darts.push_back({2 * j, 2 * j + 1});

    // rotations: first incident dart pinned, the rest permuted
    std::vector<std::vector<int>> tail(v);
    for (int i = 0; i < v; ++i)
      tail[i].assign(incident[i].begin() + 1, incident[i].end());
    std::function<void(int, std::vector<std::vector<int>>&)> rots =
        [&](int vtx, std::vector<std::vector<int>>& rot) {
          if (vtx == v) {
            // cilium placement: k vertices, one corner gap each
            std::vector<int> chosen;
            std::function<void(int)> place = [&](int from) {
              if (static_cast<int>(chosen.size()) == k) {
                std::vector<int> gap(chosen.size());
                std::function<void(size_t)> corners = [&](size_t i) {
                  if (i == chosen.size()) {
                    GenState s;
                    s.rot = rot;
                    s.edges = tree_edges_as_darts;
                    s.n_tree = n;
                    s.darts = 2 * n + k;
                    for (size_t c = 0; c < chosen.size(); ++c) {
                      int dart = 2 * n + static_cast<int>(c);
                      s.rot[chosen[c]].insert(
                          s.rot[chosen[c]].begin() + gap[c] + 1, dart);
                      s.cilia.push_back(dart);
                    }
                    sink(s);
                    return;
                  }
                  for (int g = 0; g < static_cast<int>(rot[chosen[i]].size()); ++g) {
                    gap[i] = g;
                    corners(i + 1);
                  }
                };
                corners(0);
                return;
              }
              for (int c = from; c < v; ++c) {
                chosen.push_back(c);
                place(c + 1);
                chosen.pop_back();
              }
            };
            place(0);
            return;
          }
          std::sort(tail[vtx].begin(), tail[vtx].end());
          do {
            rot[vtx].assign(1, incident[vtx][0]);
            rot[vtx].insert(rot[vtx].end(), tail[vtx].begin(), tail[vtx].end());
            rots(vtx + 1, rot);
          } while (std::next_permutation(tail[vtx].begin(), tail[vtx].end()));
        };

    std::vector<std::vector<int>> rot(v);
    rots(0, rot);

    // next Pruefer sequence
    more = false;
    for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i) {
      if (seq[i] + 1 < v) {
        seq[i] += 1;
        std::fill(seq.begin() + i + 1, seq.end(), 0);
        more = true;
        break;
      }
    }
    if (seq.empty()) more = false;
  }
}

/* Expands the state by one ordered loop edge; among the two placements that
   differ only by swapping the new darts, only the one whose first new dart
   is scanned first (vertices in order, rotations left to right) survives. */
void for_each_loop_child(const GenState& s, const std::function<void(const GenState&)>& sink) {
  int x = s.darts;
  int y = s.darts + 1;
  auto scan_first_is_x = [&](const std::vector<std::vector<int>>& rot) {
    for (const auto& r : rot)
      for (int d : r)
        if (d == x || d == y) return d == x;
    return false;
  };
  int nv = static_cast<int>(s.rot.size());
  for (int v1 = 0; v1 < nv; ++v1) {
    int m1 = static_cast<int>(s.rot[v1].size());
    for (int p1 = (m1 == 0 ? 0 : 1); p1 <= m1; ++p1) {
      GenState mid = s;
      mid.rot[v1].insert(mid.rot[v1].begin() + p1, x);
      for (int v2 = 0; v2 < nv; ++v2) {
        int m2 = static_cast<int>(mid.rot[v2].size());
        for (int p2 = (m2 == 0 ? 0 : 1); p2 <= m2; ++p2) {
          GenState child = mid;
          child.rot[v2].insert(child.rot[v2].begin() + p2, y);
          if (!scan_first_is_x(child.rot)) continue;
          child.edges.push_back({x, y});
          child.darts += 2;
          sink(child);
        }
      }
    }
  }
}

void recurse_loops(const GenState& s, int remaining,
                   const std::function<void(const GenState&)>& sink) {
  if (remaining == 0) {
    sink(s);
    return;
  }
  for_each_loop_child(s, [&](const GenState& child) { recurse_loops(child, remaining - 1, sink); });
}

}  // namespace

LveGraph::LveGraph(RibbonMap map, std::vector<int> tree_edges, std::vector<int> loop_order)
    : map_(std::move(map)), tree_edges_(std::move(tree_edges)), loop_order_(std::move(loop_order)) {
  int e = map_.edge_count();
  int v = map_.vertex_count();
  if (static_cast<int>(tree_edges_.size()) != v - 1)
    throw domain_error("spanning tree must have |V|-1 edges");
  std::vector<char> in_tree(e, 0);
  for (int t : tree_edges_) {
    if (t < 0 || t >= e || in_tree[t]) throw domain_error("bad tree edge index");
    in_tree[t] = 1;
  }
  if (!std::is_sorted(tree_edges_.begin(), tree_edges_.end()))
    throw domain_error("tree_edges must be sorted");
  // spanning check by union-find over vertices
  std::vector<int> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  int merges = 0;
  for (int t : tree_edges_) {
    auto [a, b] = map_.pairs()[t];
    int ra = find(map_.vertex_of(a)), rb = find(map_.vertex_of(b));
    if (ra == rb) throw domain_error("tree edges contain a cycle");
    parent[ra] = rb;
    ++merges;
  }
  if (merges != v - 1) throw domain_error("tree does not span");
  std::vector<char> in_loops(e, 0);
  for (int l : loop_order_) {
    if (l < 0 || l >= e || in_tree[l] || in_loops[l])
      throw domain_error("bad loop edge index");
    in_loops[l] = 1;
  }
  if (static_cast<int>(loop_order_.size()) != e - (v - 1))
    throw domain_error("loop order must cover all non-tree edges");
}

std::string LveGraph::to_json() const {
  nlohmann::json j = nlohmann::json::parse(map_.to_json());
  j["tree_edges"] = tree_edges_;
  j["loop_order"] = loop_order_;
  return j.dump();
}

LveGraph LveGraph::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RibbonMap map = RibbonMap::from_json(text);
  std::vector<int> tree = j.at("tree_edges").get<std::vector<int>>();
  std::vector<int> loops = j.at("loop_order").get<std::vector<int>>();
  return LveGraph(std::move(map), std::move(tree), std::move(loops));
}

BigInt count_lve_trees(int n, int k) {
  if (n < 0 || k < 0) throw domain_error("count_lve_trees needs n, k >= 0");
  if (k > n + 1) return 0;
  if (n == 0 && k == 0) return 1;
  BigInt num = factorial(2 * n + k - 1) * factorial(n + 1);
  BigInt den = factorial(n + k) * factorial(n + 1 - k) * factorial(k);
  BigInt q = num / den;
  if (q * den != num) throw invariant_error("tree count formula not integral");
  return q;
}

BigInt count_lve_graphs(int n_tree, int n_loop, int k) {
  if (n_tree < 0 || n_loop < 0 || k < 0)
    throw domain_error("count_lve_graphs needs non-negative arguments");
  if (k > n_tree + 1) return 0;
  if (k == 0 && n_tree == 0) {
    if (n_loop == 0) return 1;
    throw domain_error("count formula requires a cilium or a tree edge");
  }
  BigInt num = factorial(2 * n_tree + 2 * n_loop + k - 1) * factorial(n_tree + 1);
  BigInt den = factorial(n_tree + k) * factorial(k) * factorial(n_tree + 1 - k);
  den <<= n_loop;
  BigInt q = num / den;
  if (q * den != num) throw invariant_error("graph count formula not integral");
  return q;
}

std::vector<LveGraph> enumerate_lve_trees(int n, int k) {
  std::vector<LveGraph> out;
  for_each_tree_state(n, k, [&](const GenState& s) { out.push_back(to_lve(s)); });
  return out;
}

std::vector<LveGraph> enumerate_lve_graphs(int n_tree, int n_loop, int k) {
  if (n_tree + n_loop > 4)
    throw capacity_error("enumerate_lve_graphs capped at 4 total edges; stream instead");
  std::vector<LveGraph> out;
  for_each_tree_state(n_tree, k, [&](const GenState& t) {
    recurse_loops(t, n_loop, [&](const GenState& s) { out.push_back(to_lve(s)); });
  });
  return out;
}

long long for_each_lve_graph(int n_tree, int n_loop, int k,
                             const std::function<void(const LveGraph&)>& sink) {
  return for_each_lve_graph_strided(n_tree, n_loop, k, 1, 0, sink);
}

long long for_each_lve_graph_strided(int n_tree, int n_loop, int k, int stride, int offset,
                                     const std::function<void(const LveGraph&)>& sink) {
  if (stride < 1 || offset < 0 || offset >= stride)
    throw domain_error("stride must be positive with 0 <= offset < stride");
  long long count = 0;
  long long seed_index = 0;
  for_each_tree_state(n_tree, k, [&](const GenState& t) {
    if (seed_index++ % stride != offset) return;
    recurse_loops(t, n_loop, [&](const GenState& s) {
      ++count;
      sink(to_lve(s));
    });
  });
  return count;
}

GrowResult grow_loops(const LveGraph& seed, const GrowStop& stop) {
  if (stop.max_edges < 0 || stop.max_edges > 5)
    throw capacity_error("grow_loops supports max_edges in 0..5");
  if (stop.max_genus && *stop.max_genus < 0)
    throw domain_error("max_genus must be non-negative");
  GrowResult out;
  int seed_edges = seed.map().edge_count();
  if (seed_edges > stop.max_edges)
    throw domain_error("seed already exceeds the edge stop");

  // classification: returns true when the graph joins the frontier
  auto is_frontier = [&](const LveGraph& g) {
    if (stop.max_genus) return g.map().genus() == *stop.max_genus + 1;
    return g.map().edge_count() == stop.max_edges;
  };
  if (stop.max_genus && seed.map().genus() > *stop.max_genus + 1)
    throw domain_error("seed genus already exceeds the genus stop");

  std::function<void(const GenState&)> expand = [&](const GenState& s) {
    for_each_loop_child(s, [&](const GenState& child_state) {
      LveGraph child = to_lve(child_state);
      if (is_frontier(child)) {
        out.frontier.push_back(std::move(child));
        return;
      }
      out.retained.push_back(child);
      if (child.map().edge_count() < stop.max_edges) expand(child_state);
    });
  };

  if (is_frontier(seed)) {
    out.frontier.push_back(seed);
    return out;
  }
  out.retained.push_back(seed);
  if (seed_edges < stop.max_edges) expand(from_lve(seed));
  return out;
}

std::vector<std::vector<double>> tree_covariance(const LveGraph& tree,
                                                 const std::vector<double>& t) {
  if (!tree.is_tree()) throw domain_error("tree_covariance needs a tree");
  if (t.size() != tree.tree_edges().size())
    throw domain_error("one weakening parameter per tree edge");
  for (double x : t)
    if (!(x >= 0.0 && x <= 1.0)) throw domain_error("weakening parameters lie in [0,1]");
  int v = tree.map().vertex_count();
  std::vector<std::vector<std::pair<int, double>>> adj(v);
  for (size_t i = 0; i < t.size(); ++i) {
    auto [a, b] = tree.map().pairs()[tree.tree_edges()[i]];
    int u = tree.map().vertex_of(a), w = tree.map().vertex_of(b);
    adj[u].push_back({w, t[i]});
    adj[w].push_back({u, t[i]});
  }
  std::vector<std::vector<double>> c(v, std::vector<double>(v, 0.0));
  for (int s = 0; s < v; ++s) {
    c[s][s] = 1.0;
    // depth-first walk carrying the running minimum
    std::vector<std::pair<int, double>> stack{{s, 1.0}};
    std::vector<char> vis(v, 0);
    vis[s] = 1;
    while (!stack.empty()) {
      auto [u, m] = stack.back();
      stack.pop_back();
      for (auto [w, tw] : adj[u]) {
        if (vis[w]) continue;
        vis[w] = 1;
        double mm = std::min(m, tw);
        c[s][w] = mm;
        stack.push_back({w, mm});
      }
    }
  }
  return c;
}

BigRat hepp_weight(const LveGraph& g) {
  int e = g.map().edge_count();
  if (e > 7) throw capacity_error("hepp_weight capped at 7 edges");
  int v = g.map().vertex_count();
  std::vector<std::pair<int, int>> ends(e);
  for (int i = 0; i < e; ++i) {
    auto [a, b] = g.map().pairs()[i];
    ends[i] = {g.map().vertex_of(a), g.map().vertex_of(b)};
  }
  std::vector<char> in_tree(e, 0);
  for (int t : g.tree_edges()) in_tree[t] = 1;

  std::vector<int> order(e);
  std::iota(order.begin(), order.end(), 0);
  BigInt hits = 0, total = 0;
  std::vector<int> parent(v);
  do {
    total += 1;
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    bool match = true;
    int accepted = 0;
    for (int idx : order) {
      int ra = find(ends[idx].first), rb = find(ends[idx].second);
      bool accept = ra != rb;
      if (accept) {
        parent[ra] = rb;
        ++accepted;
      }
      if (accept != static_cast<bool>(in_tree[idx])) {
        match = false;
        break;
      }
    }
    if (match && accepted != v - 1) match = false;
    if (match) hits += 1;
  } while (std::next_permutation(order.begin(), order.end()));
  return BigRat(hits, total);
}

BigRat bkar_verify(int n, const std::map<std::vector<int>, BigRat>& phi) {
  if (n != 2 && n != 3) throw capacity_error("bkar_verify supports n in {2,3}");
  int nvars = n * (n - 1) / 2;
  for (const auto& [e, c] : phi) {
    if (static_cast<int>(e.size()) != nvars)
      throw domain_error("exponent vectors must have one entry per vertex pair");
    int total = 0;
    for (int x : e) {
      if (x < 0) throw domain_error("negative exponent");
      total += x;
    }
    if (total > 4) throw capacity_error("bkar_verify capped at total degree 4");
    (void)c;
  }
  // vertex pairs in variable order
  std::vector<std::pair<int, int>> vars;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) vars.push_back({i, j});

  // forests = acyclic edge subsets; for n <= 3 that is every subset of
  // size < n
  std::vector<std::vector<int>> forests;
  for (int mask = 0; mask < (1 << nvars); ++mask) {
    std::vector<int> f;
    for (int b = 0; b < nvars; ++b)
      if (mask & (1 << b)) f.push_back(b);
    if (static_cast<int>(f.size()) < n) forests.push_back(f);
  }

  BigRat lhs = 0;
  for (const auto& [e, c] : phi) lhs += c;

  BigRat rhs = 0;
  for (const auto& forest : forests) {
    // mixed first partial of phi with respect to the forest variables
    std::map<std::vector<int>, BigRat> d = phi;
    for (int fe : forest) {
      std::map<std::vector<int>, BigRat> next;
      for (const auto& [e, c] : d) {
        if (e[fe] == 0) continue;
        std::vector<int> e2 = e;
        e2[fe] -= 1;
        next[e2] += c * e[fe];
      }
      d = std::move(next);
    }
    // substitute: connected pairs get the min over their forest path,
    // disconnected pairs get 0
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int a) {
      while (comp[a] != a) a = comp[a] = comp[comp[a]];
      return a;
    };
    for (int fe : forest) comp[find(vars[fe].first)] = find(vars[fe].second);

    for (const auto& [e, c] : d) {
      if (forest.empty()) {
        bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (constant) rhs += c;
        continue;
      }
      if (forest.size() == 1) {
        int fe = forest[0];
        bool alive = true;
        for (int vi = 0; vi < nvars && alive; ++vi)
          if (vi != fe && e[vi] > 0) alive = false;  // disconnected pair -> 0
        if (!alive) continue;
        rhs += c / BigRat(e[fe] + 1);
        continue;
      }
      // two forest edges on three vertices: the remaining pair takes the
      // min of the two forest variables
      int a = forest[0], b = forest[1];
      int third = -1;
      for (int vi = 0; vi < nvars; ++vi)
        if (vi != a && vi != b) third = vi;
      int p = e[a], q = e[b], r = (third >= 0 ? e[third] : 0);
      BigRat part = BigRat(1, (p + r + 1)) * BigRat(1, (p + q + r + 2)) +
                    BigRat(1, (q + r + 1)) * BigRat(1, (p + q + r + 2));
      rhs += c * part;
    }
  }
  BigRat diff = lhs - rhs;
  if (diff < 0) diff = -diff;
  return diff;
}

}  // namespace lvelab
