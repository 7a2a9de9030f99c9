#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace gcpoly::detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), classes_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false if a and b were already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    --classes_;
    return true;
  }

  std::size_t classes() const { return classes_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t classes_;
};

}  // namespace gcpoly::detail
