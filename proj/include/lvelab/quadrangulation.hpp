#pragma once

#include <string>
#include <vector>

#include "lvelab/ribbon_map.hpp"

namespace lvelab {

/* Bipartite quadrangulation: a cilium-free ribbon map whose vertices are
   2-colored (0 = black, from vertices of the source map; 1 = white, from
   faces), every edge joins the two colors and every face has degree 4.
   Marked edges record cilium corners and sit at their black endpoint. */
struct Quadrangulation {
  RibbonMap map;
  std::vector<int> colors;
  std::vector<int> marked_edges;
};

/* Vertex-face incidence quadrangulation of a connected map with >= 1 edge.
   Faces of the image correspond to edges of the source; genus is
   preserved; each cilium marks the edge of its corner. */
Quadrangulation to_quadrangulation(const RibbonMap& m);

/* Inverse construction: one source edge per quadrangle, rotations read off
   black corners, cilia restored from marked edges.  Rejects input that is
   not a valid 2-colored quadrangulation. */
RibbonMap from_quadrangulation(const Quadrangulation& q);

/* Medial graph: one tetravalent vertex per source edge, strand edges from
   the corners, each cilium cutting its strand into two external legs.
   Legs are kept as univalent vertices (listed in `legs`), so the medial is
   itself a cilium-free ribbon map.  orientation[d] is +1 when the strand
   leaves the vertex through dart d and -1 when it enters; around every
   tetravalent vertex the signs alternate (2-in 2-out). */
struct MedialGraph {
  RibbonMap map;
  int internal_count = 0;
  std::vector<int> legs;
  std::vector<int> orientation;
};

MedialGraph to_medial(const RibbonMap& m);

/* Canonical key of the oriented medial (orientation bytes included), for
   class-by-class correspondence checks. */
std::string medial_canonical_key(const MedialGraph& g);

}  // namespace lvelab
