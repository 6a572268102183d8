#include "lvelab/quadrangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lvelab {

namespace {

/* Rotation successor skipping cilia; requires at least one edge dart on
   the vertex. */
int next_edge_dart(const RibbonMap& m, int d) {
  int e = m.rotation_next(d);
  while (m.is_cilium(e)) e = m.rotation_next(e);
  return e;
}

}  // namespace

Quadrangulation to_quadrangulation(const RibbonMap& m) {
  if (m.edge_count() == 0)
    throw domain_error("the vertex-face quadrangulation needs at least one edge");
  int total = m.dart_count();

  // rank edge darts; cilia are stripped from the underlying map
  std::vector<int> pos(total, -1);
  int edge_darts = 0;
  for (int d = 0; d < total; ++d)
    if (!m.is_cilium(d)) pos[d] = edge_darts++;

  // face cycles of the underlying map: psi0 = pairing o (rotation skipping
  // cilia); face count equals the ciliated face count
  std::vector<int> face_of(total, -1);
  std::vector<std::vector<int>> face_cycles;
  for (int d = 0; d < total; ++d) {
    if (m.is_cilium(d) || face_of[d] >= 0) continue;
    std::vector<int> cyc;
    int cur = d;
    while (face_of[cur] < 0) {
      face_of[cur] = static_cast<int>(face_cycles.size());
      cyc.push_back(cur);
      cur = m.partner(next_edge_dart(m, cur));
    }
    face_cycles.push_back(std::move(cyc));
  }

  int v = m.vertex_count();
  int f = static_cast<int>(face_cycles.size());
  std::vector<std::vector<int>> rot(v + f);
  std::vector<std::pair<int, int>> pairs(edge_darts);
  for (int vtx = 0; vtx < v; ++vtx)
    for (int d : m.rotations()[vtx]) {
      if (m.is_cilium(d)) continue;
      rot[vtx].push_back(2 * pos[d]);
    }
  for (int fc = 0; fc < f; ++fc)
    for (auto it = face_cycles[fc].rbegin(); it != face_cycles[fc].rend(); ++it)
      rot[v + fc].push_back(2 * pos[*it] + 1);
  for (int d = 0; d < total; ++d)
    if (pos[d] >= 0) pairs[pos[d]] = {2 * pos[d], 2 * pos[d] + 1};

  // a cilium marks the corner after its rotation predecessor, which is an
  // edge dart because ciliated vertices of a connected map with edges
  // carry at least one edge dart and at most one cilium
  std::vector<int> marked;
  for (int c : m.cilia()) {
    int prev = c;
    while (m.rotation_next(prev) != c) prev = m.rotation_next(prev);
    marked.push_back(pos[prev]);
  }
  std::sort(marked.begin(), marked.end());

  std::vector<int> colors(v + f, 0);
  for (int i = v; i < v + f; ++i) colors[i] = 1;
  return Quadrangulation{RibbonMap(rot, pairs, {}), std::move(colors), std::move(marked)};
}

RibbonMap from_quadrangulation(const Quadrangulation& q) {
  const RibbonMap& Q = q.map;
  if (Q.cilium_count() != 0) throw domain_error("quadrangulations carry no cilia");
  if (static_cast<int>(q.colors.size()) != Q.vertex_count())
    throw domain_error("one color per vertex required");
  for (int c : q.colors)
    if (c != 0 && c != 1) throw domain_error("colors must be 0 or 1");
  for (auto [a, b] : Q.pairs())
    if (q.colors[Q.vertex_of(a)] == q.colors[Q.vertex_of(b)])
      throw domain_error("edges must join black to white");

  auto fs = Q.faces();
  for (const auto& cyc : fs.faces)
    if (cyc.size() != 4) throw domain_error("every face must be a quadrangle");

  // black vertices become the vertices of the reconstructed map
  int vq = Q.vertex_count();
  std::vector<int> black_id(vq, -1);
  int v = 0;
  for (int i = 0; i < vq; ++i)
    if (q.colors[i] == 0) black_id[i] = v++;
  if (v == 0) throw domain_error("no black vertices");

  // each quadrangle holds exactly two black corners; the corner after dart
  // d belongs to the face containing d, giving one map dart per black dart
  int nf = fs.face_count();
  std::vector<int> face_of(Q.dart_count());
  for (int fc = 0; fc < nf; ++fc)
    for (int d : fs.faces[fc]) face_of[d] = fc;

  std::vector<std::vector<int>> black_darts(nf);
  for (int fc = 0; fc < nf; ++fc)
    for (int d : fs.faces[fc])
      if (q.colors[Q.vertex_of(d)] == 0) black_darts[fc].push_back(d);
  std::vector<int> g_dart(Q.dart_count(), -1);
  std::vector<std::pair<int, int>> pairs(nf);
  for (int fc = 0; fc < nf; ++fc) {
    if (black_darts[fc].size() != 2)
      throw domain_error("each quadrangle must touch two black corners");
    g_dart[black_darts[fc][0]] = 2 * fc;
    g_dart[black_darts[fc][1]] = 2 * fc + 1;
    pairs[fc] = {2 * fc, 2 * fc + 1};
  }

  // marked edges reinsert cilia right after their corner dart
  std::vector<int> mark_after(Q.dart_count(), -1);
  std::vector<int> seen_vertex(vq, 0);
  int cilium_dart = 2 * nf;
  std::vector<int> cilia;
  for (size_t i = 0; i < q.marked_edges.size(); ++i) {
    int e = q.marked_edges[i];
    if (e < 0 || e >= Q.edge_count()) throw domain_error("marked edge out of range");
    auto [a, b] = Q.pairs()[e];
    int bd = q.colors[Q.vertex_of(a)] == 0 ? a : b;
    if (mark_after[bd] >= 0) throw domain_error("duplicate marked edge");
    if (seen_vertex[Q.vertex_of(bd)]++)
      throw domain_error("at most one marked edge per black vertex");
    mark_after[bd] = cilium_dart + static_cast<int>(i);
    cilia.push_back(cilium_dart + static_cast<int>(i));
  }

  std::vector<std::vector<int>> rot(v);
  for (int i = 0; i < vq; ++i) {
    if (q.colors[i] != 0) continue;
    for (int qd : Q.rotations()[i]) {
      if (mark_after[qd] >= 0) rot[black_id[i]].push_back(mark_after[qd]);
      rot[black_id[i]].push_back(g_dart[qd]);
    }
  }
  return RibbonMap(rot, pairs, cilia);
}

MedialGraph to_medial(const RibbonMap& m) {
  int e = m.edge_count();
  int k = m.cilium_count();
  if (e == 0 && k == 0)
    throw domain_error("the bare vertex has no strands to form a medial");

  // darts 4i..4i+3 at the tetravalent vertex of edge i: (in, out) at the
  // lower dart then (in, out) at its partner; legs follow, one dart each
  std::vector<int> in_dart(m.dart_count(), -1), out_dart(m.dart_count(), -1);
  for (int i = 0; i < e; ++i) {
    auto [a, b] = m.pairs()[i];
    in_dart[a] = 4 * i;
    out_dart[a] = 4 * i + 1;
    in_dart[b] = 4 * i + 2;
    out_dart[b] = 4 * i + 3;
  }
  std::vector<int> src_leg(m.dart_count(), -1), dst_leg(m.dart_count(), -1);
  std::vector<int> legs;
  int next_vertex = e;
  int next_dart = 4 * e;
  for (int c : m.cilia()) {
    src_leg[c] = next_dart++;
    dst_leg[c] = next_dart++;
    legs.push_back(next_vertex++);
    legs.push_back(next_vertex++);
  }

  std::vector<std::vector<int>> rot(next_vertex);
  for (int i = 0; i < e; ++i) rot[i] = {4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3};
  for (size_t j = 0; j < m.cilia().size(); ++j) {
    rot[e + 2 * j] = {src_leg[m.cilia()[j]]};
    rot[e + 2 * j + 1] = {dst_leg[m.cilia()[j]]};
  }

  // one strand edge per corner (d, next(d)), directed along the face walk
  std::vector<std::pair<int, int>> pairs;
  for (int d = 0; d < m.dart_count(); ++d) {
    int nd = m.rotation_next(d);
    int from = m.is_cilium(d) ? src_leg[d] : out_dart[d];
    int to = m.is_cilium(nd) ? dst_leg[nd] : in_dart[nd];
    pairs.push_back({from, to});
  }

  std::vector<int> orientation(next_dart, 0);
  for (int i = 0; i < e; ++i) {
    orientation[4 * i] = -1;
    orientation[4 * i + 1] = +1;
    orientation[4 * i + 2] = -1;
    orientation[4 * i + 3] = +1;
  }
  for (int c : m.cilia()) {
    orientation[src_leg[c]] = +1;
    orientation[dst_leg[c]] = -1;
  }

  return MedialGraph{RibbonMap(rot, pairs, {}), e, std::move(legs), std::move(orientation)};
}

std::string medial_canonical_key(const MedialGraph& g) {
  const RibbonMap& m = g.map;
  int total = m.dart_count();
  std::string best;
  std::vector<int> newid(total), order(total);
  for (int start = 0; start < total; ++start) {
    std::fill(newid.begin(), newid.end(), -1);
    newid[start] = 0;
    order[0] = start;
    int filled = 1;
    for (int i = 0; i < filled; ++i) {
      int d = order[i];
      for (int nb : {m.rotation_next(d), m.partner(d)}) {
        if (newid[nb] >= 0) continue;
        newid[nb] = filled;
        order[filled++] = nb;
      }
    }
    std::string enc;
    enc.reserve(3 * total);
    for (int i = 0; i < total; ++i) {
      int d = order[i];
      enc.push_back(static_cast<char>(newid[m.rotation_next(d)]));
      enc.push_back(static_cast<char>(newid[m.partner(d)]));
      enc.push_back(static_cast<char>(g.orientation[d] + 2));
    }
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

}  // namespace lvelab
