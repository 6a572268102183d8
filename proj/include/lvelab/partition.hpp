#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "lvelab/errors.hpp"

namespace lvelab {

/* Integer partition, parts sorted non-decreasingly. */
struct IntegerPartition {
  std::vector<int> parts;

  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end());
    for (int x : parts)
      if (x < 1) throw domain_error("partition parts must be positive");
  }

  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int size() const { return static_cast<int>(parts.size()); }

  bool operator==(const IntegerPartition& o) const { return parts == o.parts; }
  bool operator<(const IntegerPartition& o) const { return parts < o.parts; }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }
};

/* All partitions of k, deterministic order. */
std::vector<IntegerPartition> partitions_of(int k);

}  // namespace lvelab
