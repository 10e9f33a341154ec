#ifndef COMBGRAPH_BITS_HPP
#define COMBGRAPH_BITS_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace combgraph {

// Fixed-universe bitset over {0, ..., universe-1}. All set operations are
// between bitsets of the same universe.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static Bits full(int universe) {
    Bits b(universe);
    for (auto& w : b.words_) w = ~0ULL;
    b.trim();
    return b;
  }

  static Bits of(int universe, std::initializer_list<int> members) {
    Bits b(universe);
    for (int v : members) b.set(v);
    return b;
  }

  int universe() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (words_[i >> 6] >> (i & 63)) & 1ULL;
  }

  void set(int i) {
    assert(i >= 0 && i < n_);
    words_[i >> 6] |= 1ULL << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < n_);
    words_[i >> 6] &= ~(1ULL << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  bool intersects(const Bits& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  bool is_subset_of(const Bits& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  Bits& operator&=(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  Bits& operator|=(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  // Set difference.
  Bits& operator-=(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

  // Complement within the universe.
  Bits operator~() const {
    Bits r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  // Smallest member, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    }
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool operator==(const Bits& o) const = default;

 private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (~0ULL) >> (64 - n_ % 64);
    }
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace combgraph

#endif
