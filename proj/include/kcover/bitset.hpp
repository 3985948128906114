#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace kcover {

using BitWord = std::uint64_t;
inline constexpr int kBitsPerWord = 64;

/**
 * Fixed-width bitset sized at construction. Storage is 64-bit words; the
 * unused high bits of the last word are kept zero, so count() and
 * operator== work straight off the words.
 */
class Bitset {
public:
  Bitset() = default;

  explicit Bitset(int nbits)
      : nbits_(nbits), words_((nbits + kBitsPerWord - 1) / kBitsPerWord, 0) {}

  static Bitset from_words(std::span<const BitWord> words, int nbits) {
    Bitset b(nbits);
    std::copy(words.begin(), words.end(), b.words_.begin());
    return b;
  }

  int size_bits() const { return nbits_; }
  int word_count() const { return static_cast<int>(words_.size()); }

  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & BitWord{1};
  }
  void set(int i) { words_[i >> 6] |= BitWord{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(BitWord{1} << (i & 63)); }

  void clear() { std::fill(words_.begin(), words_.end(), BitWord{0}); }

  /// Set bits 0..nbits-1.
  void set_all() {
    std::fill(words_.begin(), words_.end(), ~BitWord{0});
    mask_tail();
  }

  int count() const {
    int total = 0;
    for (BitWord w : words_) total += std::popcount(w);
    return total;
  }

  bool none() const {
    for (BitWord w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  Bitset& operator|=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  /// this := this \ other
  Bitset& subtract(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  /// Flip every bit below size_bits().
  void flip_all() {
    for (BitWord& w : words_) w = ~w;
    mask_tail();
  }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::span<const BitWord> words() const { return words_; }

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      BitWord bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        fn(static_cast<int>(w) * kBitsPerWord + b);
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each_set([&](int i) { out.push_back(i); });
    return out;
  }

private:
  void mask_tail() {
    const int rem = nbits_ % kBitsPerWord;
    if (rem != 0 && !words_.empty())
      words_.back() &= (BitWord{1} << rem) - 1;
  }

  int nbits_ = 0;
  std::vector<BitWord> words_;
};

inline int intersection_count(const Bitset& a, const Bitset& b) {
  int total = 0;
  auto wa = a.words(), wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i)
    total += std::popcount(wa[i] & wb[i]);
  return total;
}

}  // namespace kcover
