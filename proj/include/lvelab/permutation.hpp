#pragma once

#include <vector>

#include "lvelab/errors.hpp"
#include "lvelab/partition.hpp"

namespace lvelab {

/* Permutation of {0,..,k-1} stored as the image table. */
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int k);
  /* From 1-based images as used in serialized form. */
  static Permutation from_one_based(const std::vector<int>& images);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }

  Permutation compose(const Permutation& rhs) const;  // (*this)(rhs(i))
  Permutation inverse() const;

  IntegerPartition cycle_type() const;
  int cycle_count() const;
  std::vector<std::vector<int>> cycles() const;

  std::vector<int> one_based() const;
  const std::vector<int>& images() const { return img_; }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
  std::vector<int> img_;
};

/* All permutations of S_k in lexicographic order; k <= 8 guarded. */
std::vector<Permutation> symmetric_group(int k);

/* A representative with the given cycle type, cycles laid out consecutively. */
Permutation representative(const IntegerPartition& type);

}  // namespace lvelab
