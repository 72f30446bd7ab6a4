#pragma once

// Bit-indexed subsets of a hyperring carrier. A carrier has at most
// kMaxCarrier elements, so one 64-bit word is enough; the runtime cap
// (default 24, see io) keeps exhaustive triple scans cheap.

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hyperspec {

using Elem = int;

inline constexpr int kMaxCarrier = 63;

class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t raw) : bits_(raw) {}

  static Subset of(std::initializer_list<Elem> xs) {
    Subset s;
    for (Elem x : xs) s.insert(x);
    return s;
  }
  static Subset of(const std::vector<Elem>& xs) {
    Subset s;
    for (Elem x : xs) s.insert(x);
    return s;
  }
  static constexpr Subset single(Elem a) { return Subset(std::uint64_t{1} << a); }
  static constexpr Subset full(int n) {
    return Subset(n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n));
  }

  bool contains(Elem a) const { return (bits_ >> a) & 1; }
  void insert(Elem a) {
    assert(a >= 0 && a <= kMaxCarrier);
    bits_ |= std::uint64_t{1} << a;
  }
  void erase(Elem a) { bits_ &= ~(std::uint64_t{1} << a); }

  int count() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t raw() const { return bits_; }

  bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  Subset complement(int n) const { return Subset(~bits_ & full(n).bits_); }

  Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

  bool operator==(const Subset&) const = default;

  // Least member; subset must be nonempty.
  Elem min() const {
    assert(bits_ != 0);
    return __builtin_ctzll(bits_);
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits_; b; b &= b - 1)
      out.push_back(__builtin_ctzll(b));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order on subsets: cardinality first, then lexicographic on the
// increasing member sequence ({0,3} precedes {1,2}).
inline bool canonical_less(Subset a, Subset b) {
  if (a.count() != b.count()) return a.count() < b.count();
  while (!a.empty() && !b.empty()) {
    Elem x = a.min(), y = b.min();
    if (x != y) return x < y;
    a.erase(x);
    b.erase(y);
  }
  return !a.empty() ? false : !b.empty();
}

}  // namespace hyperspec
