#pragma once

#include <numeric>
#include <vector>

namespace smc::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size), count_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --count_;
  }

  std::size_t components() const { return count_; }

 private:
  std::vector<int> parent_;
  std::size_t count_;
};

}  // namespace smc::detail
