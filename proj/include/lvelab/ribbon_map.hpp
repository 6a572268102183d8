#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lvelab/errors.hpp"

namespace lvelab {

/* Face data of a ribbon map: each face is the dart cycle traced by the
   permutation psi = pairing o rotation, listed from its smallest dart and
   sorted by that dart.  A face is broken when it contains at least one
   cilium; cilia_count[f] is the number c(f) of cilia on face f. */
struct FaceStructure {
  std::vector<std::vector<int>> faces;
  std::vector<int> cilia_count;

  int face_count() const { return static_cast<int>(faces.size()); }
  bool is_broken(int f) const { return cilia_count[f] > 0; }
  int broken_count() const {
    int b = 0;
    for (int c : cilia_count)
      if (c > 0) ++b;
    return b;
  }
};

/* Connected oriented combinatorial map with cilia.  Darts are the integers
   0..dart_count()-1.  The rotation lists the darts of each vertex in cyclic
   order; the pairing matches the darts of each edge; a cilium is a dart
   belonging to no edge, at most one per vertex.  Vertex v is the v-th
   rotation cycle, which fixes vertex labels for labeled enumeration. */
class RibbonMap {
public:
  RibbonMap(std::vector<std::vector<int>> rotations,
            std::vector<std::pair<int, int>> pairs, std::vector<int> cilia);

  /* Builds without the involution, cilia and connectivity checks, so tests
     can fabricate corrupted maps.  Darts must still cover 0..D-1 exactly
     once across the rotation cycles. */
  static RibbonMap unchecked(std::vector<std::vector<int>> rotations,
                             std::vector<std::pair<int, int>> pairs,
                             std::vector<int> cilia);

  int dart_count() const { return static_cast<int>(rot_next_.size()); }
  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int edge_count() const { return static_cast<int>(pairs_.size()); }
  int cilium_count() const { return static_cast<int>(cilia_.size()); }

  const std::vector<std::vector<int>>& rotations() const { return rotations_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  const std::vector<int>& cilia() const { return cilia_; }

  bool is_cilium(int dart) const { return partner_[dart] == dart; }
  int rotation_next(int dart) const { return rot_next_[dart]; }
  int partner(int dart) const { return partner_[dart]; }
  int vertex_of(int dart) const { return vertex_of_[dart]; }

  /* Traces psi = pairing o rotation; domain_error if the map is not
     connected (reachable only with the unchecked backdoor). */
  FaceStructure faces() const;

  /* Genus from 2g = 2 - |V| + |E| - |F|; invariant_error when the result
     is negative or odd, which signals a corrupted map. */
  int genus() const;

  /* chi = |V| - |E| + |F| - |B| = 2 - 2g - |B|. */
  int euler_characteristic() const;

  /* Minimal dart relabeling over all start darts: from each start, darts
     are numbered in discovery order following rotation then pairing, and
     the per-dart (rotation, pairing) tables are compared lexicographically.
     Equal encodings characterize isomorphic maps. */
  std::string canonical_encoding() const;
  RibbonMap canonical_form() const;

  /* Number of starts achieving the minimal encoding; this is the order of
     the rotation-preserving automorphism group, which acts freely on darts
     in a connected map. */
  int aut_order() const;

  /* Like canonical_encoding but additionally records each dart's vertex
     label, so equal encodings characterize isomorphism of vertex-labeled
     maps. */
  std::string labeled_encoding() const;

  /* New map with the edge through the given dart deleted, darts renumbered
     compactly; domain_error if the removal disconnects the map or the dart
     is a cilium. */
  RibbonMap remove_edge(int dart) const;

  std::string to_json() const;
  static RibbonMap from_json(const std::string& text);

  bool operator==(const RibbonMap& o) const {
    return rotations_ == o.rotations_ && pairs_ == o.pairs_ && cilia_ == o.cilia_;
  }

private:
  RibbonMap() = default;
  void build_tables(std::vector<std::vector<int>> rotations,
                    std::vector<std::pair<int, int>> pairs,
                    std::vector<int> cilia, bool checked);
  FaceStructure trace_faces() const;
  bool is_connected() const;
  std::string encode_from(int start, bool labeled) const;
  std::string minimal_encoding(bool labeled) const;

  std::vector<std::vector<int>> rotations_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> cilia_;
  std::vector<int> rot_next_;
  std::vector<int> partner_;
  std::vector<int> vertex_of_;
};

}  // namespace lvelab
