#ifndef DOMSET_BITSET_HPP
#define DOMSET_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace domset {

// Fixed-size bit vector backed by 64-bit words. Bits at index >= size()
// stay clear; every operation preserves that invariant.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64, 0) {
    assert(n >= 0);
  }

  static Bitset ones(int n) {
    Bitset b(n);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  int size() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    assert(i >= 0 && i < n_);
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < n_);
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }

  bool none() const { return !any(); }

  // True iff all n bits are set (vacuously true for n = 0).
  bool all() const {
    if (n_ == 0) return true;
    const std::size_t full = words_.size() - 1;
    for (std::size_t i = 0; i < full; ++i) {
      if (words_[i] != ~std::uint64_t{0}) return false;
    }
    return words_[full] == tail_mask();
  }

  bool intersects(const Bitset& other) const {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

  bool is_subset_of(const Bitset& other) const {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  Bitset& operator|=(const Bitset& other) {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  Bitset& operator&=(const Bitset& other) {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  std::size_t word_count() const { return words_.size(); }

  std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each_set([&](int i) { out.push_back(i); });
    return out;
  }

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int bit = std::countr_zero(w);
        fn(static_cast<int>(wi * 64) + bit);
        w &= w - 1;
      }
    }
  }

 private:
  std::uint64_t tail_mask() const {
    const int rem = n_ & 63;
    return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
  }

  void trim() {
    if (!words_.empty()) words_.back() &= tail_mask();
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace domset

#endif
