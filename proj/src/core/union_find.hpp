#pragma once

#include <numeric>
#include <vector>

namespace ltc {

// Union-find with path compression; the representative of a class is
// always its smallest element, which keeps downstream orderings stable.
class UnionFind {
public:
  explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    int root = x;
    while (parent_[static_cast<size_t>(root)] != root) root = parent_[static_cast<size_t>(root)];
    while (parent_[static_cast<size_t>(x)] != root) {
      int next = parent_[static_cast<size_t>(x)];
      parent_[static_cast<size_t>(x)] = root;
      x = next;
    }
    return root;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[static_cast<size_t>(b)] = a;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

private:
  std::vector<int> parent_;
};

}  // namespace ltc
