#include "lvelab/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace lvelab {

std::vector<IntegerPartition> partitions_of(int k) {
  if (k < 0) throw domain_error("partitions_of: negative k");
  std::vector<IntegerPartition> out;
  std::vector<int> cur;
  // non-increasing generation, then store sorted ascending
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      IntegerPartition p;
      p.parts = cur;
      std::sort(p.parts.begin(), p.parts.end());
      out.push_back(p);
      return;
    }
    for (int next = std::min(rem, maxp); next >= 1; --next) {
      cur.push_back(next);
      rec(rem - next, next);
      cur.pop_back();
    }
  };
  rec(k, std::max(k, 1));
  if (k == 0) out.push_back(IntegerPartition{});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw domain_error("permutation images must be a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> v(images.size());
  for (size_t i = 0; i < images.size(); ++i) v[i] = images[i] - 1;
  return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (size() != rhs.size()) throw domain_error("compose: size mismatch");
  std::vector<int> v(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) v[i] = img_[rhs.img_[i]];
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<int>(i);
  return Permutation(std::move(v));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = static_cast<int>(i);
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

IntegerPartition Permutation::cycle_type() const {
  std::vector<int> lens;
  for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
  return IntegerPartition(std::move(lens));
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

std::vector<int> Permutation::one_based() const {
  std::vector<int> v(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
  return v;
}

std::vector<Permutation> symmetric_group(int k) {
  if (k < 0 || k > 8) throw capacity_error("symmetric_group: k out of range");
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation representative(const IntegerPartition& type) {
  std::vector<int> img(type.sum());
  int base = 0;
  for (int len : type.parts) {
    for (int i = 0; i < len; ++i) img[base + i] = base + (i + 1) % len;
    base += len;
  }
  return Permutation(std::move(img));
}

}  // namespace lvelab
