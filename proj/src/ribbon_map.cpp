#include "lvelab/ribbon_map.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>

namespace lvelab {

namespace {

/* Rotates a cycle so it starts at its smallest dart. */
std::vector<int> normalize_cycle(std::vector<int> c) {
  if (c.empty()) return c;
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  return c;
}

}  // namespace

RibbonMap::RibbonMap(std::vector<std::vector<int>> rotations,
                     std::vector<std::pair<int, int>> pairs,
                     std::vector<int> cilia) {
  build_tables(std::move(rotations), std::move(pairs), std::move(cilia), true);
}

RibbonMap RibbonMap::unchecked(std::vector<std::vector<int>> rotations,
                               std::vector<std::pair<int, int>> pairs,
                               std::vector<int> cilia) {
  RibbonMap m;
  m.build_tables(std::move(rotations), std::move(pairs), std::move(cilia), false);
  return m;
}

void RibbonMap::build_tables(std::vector<std::vector<int>> rotations,
                             std::vector<std::pair<int, int>> pairs,
                             std::vector<int> cilia, bool checked) {
  if (rotations.empty()) throw domain_error("ribbon map needs at least one vertex");
  int total = 0;
  for (const auto& c : rotations) total += static_cast<int>(c.size());
  if (total == 0 && rotations.size() > 1)
    throw domain_error("only the single bare vertex may have no darts");

  std::vector<int> seen(total, 0);
  for (const auto& c : rotations)
    for (int d : c) {
      if (d < 0 || d >= total) throw domain_error("dart ids must cover 0..D-1");
      seen[d] += 1;
    }
  for (int s : seen)
    if (s != 1) throw domain_error("each dart must appear exactly once in the rotation");

  rot_next_.assign(total, -1);
  vertex_of_.assign(total, -1);
  for (int v = 0; v < static_cast<int>(rotations.size()); ++v) {
    const auto& c = rotations[v];
    for (size_t i = 0; i < c.size(); ++i) {
      rot_next_[c[i]] = c[(i + 1) % c.size()];
      vertex_of_[c[i]] = v;
    }
  }

  partner_.resize(total);
  std::iota(partner_.begin(), partner_.end(), 0);
  for (auto& [a, b] : pairs) {
    if (a < 0 || a >= total || b < 0 || b >= total || a == b)
      throw domain_error("edge pair must join two distinct darts");
    if (a > b) std::swap(a, b);
    partner_[a] = b;
    partner_[b] = a;
  }
  std::sort(pairs.begin(), pairs.end());
  std::sort(cilia.begin(), cilia.end());
  for (int d : cilia)
    if (d < 0 || d >= total) throw domain_error("cilium refers to a missing dart");

  if (checked) {
    std::vector<int> role(total, 0);  // 1 = paired, 2 = cilium
    for (const auto& [a, b] : pairs) {
      if (role[a] || role[b]) throw domain_error("dart used by two edges");
      role[a] = role[b] = 1;
    }
    for (size_t i = 0; i < cilia.size(); ++i) {
      int d = cilia[i];
      if (i > 0 && cilia[i - 1] == d) throw domain_error("duplicate cilium");
      if (role[d]) throw domain_error("cilium dart also used by an edge");
      role[d] = 2;
    }
    for (int d = 0; d < total; ++d)
      if (role[d] == 0) throw domain_error("dart belongs to no edge and is not a cilium");
    std::vector<int> per_vertex(rotations.size(), 0);
    for (int d : cilia) per_vertex[vertex_of_[d]] += 1;
    for (int c : per_vertex)
      if (c > 1) throw domain_error("a vertex may carry at most one cilium");
  }

  for (auto& c : rotations) c = normalize_cycle(std::move(c));
  rotations_ = std::move(rotations);
  pairs_ = std::move(pairs);
  cilia_ = std::move(cilia);

  if (checked && !is_connected()) throw domain_error("ribbon map must be connected");
}

bool RibbonMap::is_connected() const {
  int total = dart_count();
  if (total == 0) return vertex_count() == 1;
  for (const auto& c : rotations_)
    if (c.empty()) return false;
  std::vector<char> vis(total, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    for (int nb : {rot_next_[d], partner_[d]})
      if (!vis[nb]) {
        vis[nb] = 1;
        ++reached;
        stack.push_back(nb);
      }
  }
  return reached == total;
}

FaceStructure RibbonMap::trace_faces() const {
  FaceStructure fs;
  int total = dart_count();
  if (total == 0) {
    fs.faces.push_back({});
    fs.cilia_count.push_back(0);
    return fs;
  }
  std::vector<char> vis(total, 0);
  for (int s = 0; s < total; ++s) {
    if (vis[s]) continue;
    std::vector<int> face;
    int c = 0;
    int d = s;
    while (!vis[d]) {
      vis[d] = 1;
      face.push_back(d);
      if (is_cilium(d)) ++c;
      d = partner_[rot_next_[d]];
    }
    fs.faces.push_back(std::move(face));
    fs.cilia_count.push_back(c);
  }
  return fs;
}

FaceStructure RibbonMap::faces() const {
  if (!is_connected()) throw domain_error("face structure requires a connected map");
  return trace_faces();
}

int RibbonMap::genus() const {
  int f = trace_faces().face_count();
  int doubled = 2 - vertex_count() + edge_count() - f;
  if (doubled < 0 || doubled % 2 != 0)
    throw invariant_error("euler relation violated: corrupted map");
  return doubled / 2;
}

int RibbonMap::euler_characteristic() const {
  FaceStructure fs = trace_faces();
  return vertex_count() - edge_count() + fs.face_count() - fs.broken_count();
}

std::string RibbonMap::encode_from(int start, bool labeled) const {
  int total = dart_count();
  std::vector<int> nid(total, -1);
  std::vector<int> old_of;
  old_of.reserve(total);
  nid[start] = 0;
  old_of.push_back(start);
  for (size_t i = 0; i < old_of.size(); ++i) {
    int o = old_of[i];
    for (int nb : {rot_next_[o], partner_[o]})
      if (nid[nb] < 0) {
        nid[nb] = static_cast<int>(old_of.size());
        old_of.push_back(nb);
      }
  }
  if (static_cast<int>(old_of.size()) != total)
    throw domain_error("encoding requires a connected map");
  std::string e;
  e.reserve(static_cast<size_t>(total) * (labeled ? 3 : 2));
  for (int i = 0; i < total; ++i) {
    int o = old_of[i];
    e.push_back(static_cast<char>(nid[rot_next_[o]]));
    e.push_back(static_cast<char>(nid[partner_[o]]));
    if (labeled) e.push_back(static_cast<char>(vertex_of_[o]));
  }
  return e;
}

std::string RibbonMap::minimal_encoding(bool labeled) const {
  int total = dart_count();
  if (total == 0) return std::string();
  std::string best = encode_from(0, labeled);
  for (int s = 1; s < total; ++s) {
    std::string e = encode_from(s, labeled);
    if (e < best) best = std::move(e);
  }
  return best;
}

std::string RibbonMap::canonical_encoding() const { return minimal_encoding(false); }

std::string RibbonMap::labeled_encoding() const { return minimal_encoding(true); }

RibbonMap RibbonMap::canonical_form() const {
  int total = dart_count();
  if (total == 0) return *this;
  std::string e = minimal_encoding(false);
  std::vector<int> nu(total), al(total);
  for (int i = 0; i < total; ++i) {
    nu[i] = static_cast<unsigned char>(e[2 * i]);
    al[i] = static_cast<unsigned char>(e[2 * i + 1]);
  }
  std::vector<std::vector<int>> rotations;
  std::vector<char> vis(total, 0);
  for (int s = 0; s < total; ++s) {
    if (vis[s]) continue;
    std::vector<int> cyc;
    int d = s;
    while (!vis[d]) {
      vis[d] = 1;
      cyc.push_back(d);
      d = nu[d];
    }
    rotations.push_back(std::move(cyc));
  }
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> cilia;
  for (int d = 0; d < total; ++d) {
    if (al[d] == d)
      cilia.push_back(d);
    else if (d < al[d])
      pairs.push_back({d, al[d]});
  }
  return RibbonMap(std::move(rotations), std::move(pairs), std::move(cilia));
}

int RibbonMap::aut_order() const {
  int total = dart_count();
  if (total == 0) return 1;
  std::vector<std::string> encodings;
  encodings.reserve(total);
  for (int s = 0; s < total; ++s) encodings.push_back(encode_from(s, false));
  const std::string& best = *std::min_element(encodings.begin(), encodings.end());
  return static_cast<int>(std::count(encodings.begin(), encodings.end(), best));
}

RibbonMap RibbonMap::remove_edge(int dart) const {
  if (dart < 0 || dart >= dart_count()) throw domain_error("remove_edge: no such dart");
  if (is_cilium(dart)) throw domain_error("remove_edge: dart is a cilium");
  int mate = partner_[dart];
  std::vector<int> relabel(dart_count(), -1);
  int next = 0;
  for (int d = 0; d < dart_count(); ++d)
    if (d != dart && d != mate) relabel[d] = next++;
  std::vector<std::vector<int>> rotations;
  for (const auto& c : rotations_) {
    std::vector<int> cyc;
    for (int d : c)
      if (relabel[d] >= 0) cyc.push_back(relabel[d]);
    rotations.push_back(std::move(cyc));
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : pairs_)
    if (a != dart && a != mate) pairs.push_back({relabel[a], relabel[b]});
  std::vector<int> cilia;
  for (int d : cilia_) cilia.push_back(relabel[d]);
  return RibbonMap(std::move(rotations), std::move(pairs), std::move(cilia));
}

std::string RibbonMap::to_json() const {
  nlohmann::json j;
  j["rotation"] = rotations_;
  j["pairing"] = nlohmann::json::array();
  for (const auto& [a, b] : pairs_) j["pairing"].push_back({a, b});
  j["cilia"] = cilia_;
  return j.dump();
}

RibbonMap RibbonMap::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::vector<int>> rotations = j.at("rotation");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("pairing")) pairs.push_back({p.at(0), p.at(1)});
  std::vector<int> cilia = j.at("cilia").get<std::vector<int>>();
  return RibbonMap(std::move(rotations), std::move(pairs), std::move(cilia));
}

}  // namespace lvelab
