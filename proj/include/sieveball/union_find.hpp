#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace sieveball {

// Disjoint-set forest with path halving and union by rank.
class UnionFind {
 public:
  explicit UnionFind(uint32_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  uint32_t find(uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];  // path halving
      v = parent_[v];
    }
    return v;
  }

  void unite(uint32_t u, uint32_t v) {
    uint32_t ru = find(u), rv = find(v);
    if (ru == rv) return;
    if (rank_[ru] < rank_[rv]) std::swap(ru, rv);
    parent_[rv] = ru;
    if (rank_[ru] == rank_[rv]) ++rank_[ru];
  }

  uint32_t size() const { return static_cast<uint32_t>(parent_.size()); }

  // Dense component ids assigned by ascending first-node occurrence.
  // Returns (component_id per node, component sizes).
  std::pair<std::vector<uint32_t>, std::vector<uint32_t>> finalize() {
    const uint32_t n = size();
    std::vector<uint32_t> id(n, UINT32_MAX);
    std::vector<uint32_t> sizes;
    std::vector<uint32_t> root_to_id(n, UINT32_MAX);
    for (uint32_t v = 0; v < n; ++v) {
      const uint32_t r = find(v);
      if (root_to_id[r] == UINT32_MAX) {
        root_to_id[r] = static_cast<uint32_t>(sizes.size());
        sizes.push_back(0);
      }
      id[v] = root_to_id[r];
      ++sizes[id[v]];
    }
    return {std::move(id), std::move(sizes)};
  }

 private:
  std::vector<uint32_t> parent_;
  std::vector<uint8_t> rank_;
};

}  // namespace sieveball
