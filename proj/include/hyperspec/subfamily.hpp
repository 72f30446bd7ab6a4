#pragma once

// Subfamily enumeration with the exhaustion cap used everywhere a check
// quantifies over "every subfamily": families over at most `exhaustive_cap`
// indices are enumerated completely, larger ones get every subfamily of
// size <= small_size plus `random_samples` seeded random larger ones.

#include <cstdint>
#include <functional>
#include <vector>

namespace hyperspec {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

struct SubfamilyPolicy {
  int exhaustive_cap = 12;
  int small_size = 3;
  int random_samples = 1000;
  std::uint64_t seed = 1;
};

// Visits subfamilies of {0..m-1} as sorted index vectors (the empty one
// included). Returns true when the enumeration was exhaustive.
bool for_each_subfamily(int m, const SubfamilyPolicy& pol,
                        const std::function<void(const std::vector<int>&)>& fn);

}  // namespace hyperspec
