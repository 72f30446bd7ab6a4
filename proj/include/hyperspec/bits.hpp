#pragma once

// Dynamic bitset for point sets of finite spaces. Spaces are indexed by
// hyperideals, so the point count is not bounded by the carrier cap.

#include <cassert>
#include <cstdint>
#include <vector>

namespace hyperspec {

class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static Bits full(int n) {
    Bits b(n);
    for (int i = 0; i < n; ++i) b.insert(i);
    return b;
  }
  static Bits of(int n, std::initializer_list<int> xs) {
    Bits b(n);
    for (int x : xs) b.insert(x);
    return b;
  }

  int size() const { return n_; }

  bool contains(int i) const {
    assert(i >= 0 && i < n_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void insert(int i) {
    assert(i >= 0 && i < n_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void erase(int i) {
    assert(i >= 0 && i < n_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool subset_of(const Bits& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  Bits operator|(const Bits& o) const {
    assert(n_ == o.n_);
    Bits r(n_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] | o.words_[k];
    return r;
  }
  Bits operator&(const Bits& o) const {
    assert(n_ == o.n_);
    Bits r(n_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] & o.words_[k];
    return r;
  }
  Bits& operator&=(const Bits& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  Bits complement() const {
    Bits r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  bool operator==(const Bits& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  // Word order, used only for set/map keys.
  bool operator<(const Bits& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return words_ < o.words_;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

 private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= ~std::uint64_t{0} >> (64 - n_ % 64);
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Same convention as for carrier subsets: cardinality, then lexicographic on
// the increasing member sequence.
inline bool canonical_less(const Bits& a, const Bits& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto ea = a.elements(), eb = b.elements();
  return ea < eb;
}

}  // namespace hyperspec
