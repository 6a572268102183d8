#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lvelab/partition.hpp"
#include "lvelab/ribbon_map.hpp"

namespace lvelab {

/* One isomorphism class of ciliated ribbon maps: the canonical
   representative together with the order of its automorphism group. */
struct MapClass {
  RibbonMap map;
  long long aut_order = 0;
};

/* Optional census filters, both isomorphism invariants. */
struct MapFilters {
  std::optional<int> genus;
  std::optional<IntegerPartition> broken_partition;
};

/* Multiset of cilia counts over the broken faces: a partition of k. */
IntegerPartition broken_face_partition(const RibbonMap& m);

/* Exactly one representative per isomorphism class of connected maps with
   n edges and k cilia (at most one per vertex), in canonical-encoding
   order regardless of worker count.  Capacity n <= 6, k <= n+1.  The
   enumeration streams over spanning-tree decompositions, so memory scales
   with the class count, not the generation count. */
std::vector<MapClass> enumerate_maps(int n, int k, const MapFilters& filters = {},
                                     int workers = 0);

/* Order of the vertex-permutation group preserving edge multiplicities
   (loops included) and cilium placement, ignoring the rotation system.
   The census reports classes where it disagrees with aut_order. */
long long adjacency_aut_order(const RibbonMap& m);

/* One census line: classes with the given genus, broken face count and
   broken-face partition.  aut_mismatch counts classes in the cell whose
   adjacency automorphism group differs from the rotation-preserving one
   (computed for n <= 4, always 0 beyond under flag_aut = false). */
struct CensusRow {
  int n = 0;
  int k = 0;
  int genus = 0;
  int broken = 0;
  IntegerPartition partition;
  long long count = 0;
  long long aut_mismatch = 0;
};

std::vector<CensusRow> census_table(int n, int k, int workers = 0);

/* CSV dump of census rows: header n,k,g,b,partition,count,aut_mismatch. */
std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace lvelab
