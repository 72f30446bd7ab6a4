#include "hyperspec/subfamily.hpp"

#include <algorithm>
#include <utility>

namespace hyperspec {

namespace {

void mask_to_indices(std::uint64_t mask, std::vector<int>& out) {
  out.clear();
  for (; mask; mask &= mask - 1) out.push_back(__builtin_ctzll(mask));
}

}  // namespace

bool for_each_subfamily(int m, const SubfamilyPolicy& pol,
                        const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx;
  if (m <= pol.exhaustive_cap) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      mask_to_indices(mask, idx);
      fn(idx);
    }
    return true;
  }
  // All small subfamilies, ordered by size then lexicographically.
  fn(idx);  // empty
  for (int size = 1; size <= pol.small_size; ++size) {
    idx.assign(size, 0);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      fn(idx);
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  Rng rng(pol.seed);
  for (int s = 0; s < pol.random_samples; ++s) {
    int size = pol.small_size + 1 +
               static_cast<int>(rng.below(static_cast<std::uint64_t>(m - pol.small_size)));
    // Sample `size` distinct indices.
    std::vector<int> pool(m);
    for (int i = 0; i < m; ++i) pool[i] = i;
    idx.clear();
    for (int i = 0; i < size; ++i) {
      int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - i)));
      std::swap(pool[i], pool[j]);
      idx.push_back(pool[i]);
    }
    std::sort(idx.begin(), idx.end());
    fn(idx);
  }
  return false;
}

}  // namespace hyperspec
