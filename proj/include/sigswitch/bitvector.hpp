#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigswitch {

/// Fixed-length packed vector over GF(2).
///
/// Bits past `size()` in the last word are always zero, so word-wise
/// equality, hashing and popcount need no masking. Ordering is
/// lexicographic with bit 0 as the most significant position: the vector
/// with a 0 at the first differing index compares less.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length)
      : length_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

  static BitVector from_indices(std::size_t length,
                                const std::vector<std::size_t>& indices) {
    BitVector v(length);
    for (auto i : indices) v.set(i);
    return v;
  }

  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVector from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i);
      } else if (bits[i] != '0') {
        throw std::invalid_argument("bit string may only contain '0' and '1'");
      }
    }
    return v;
  }

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & word_type{1};
  }
  bool operator[](std::size_t i) const { return get(i); }

  void set(std::size_t i, bool value = true) {
    const word_type mask = word_type{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void reset(std::size_t i) { set(i, false); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }

  std::size_t popcount() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool none() const noexcept {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  bool any() const noexcept { return !none(); }

  /// Index of the lowest set bit, or size() if the vector is zero.
  std::size_t first_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
      }
    }
    return length_;
  }

  std::vector<std::size_t> set_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type bits = words_[w];
      while (bits != 0) {
        out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  BitVector& operator^=(const BitVector& other) {
    check_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  BitVector& operator&=(const BitVector& other) {
    check_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  BitVector& operator|=(const BitVector& other) {
    check_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  friend bool operator==(const BitVector& a, const BitVector& b) noexcept {
    return a.length_ == b.length_ && a.words_ == b.words_;
  }

  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) noexcept {
    if (a.length_ != b.length_) return a.length_ <=> b.length_;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      const word_type diff = a.words_[w] ^ b.words_[w];
      if (diff != 0) {
        const word_type lowest = diff & (~diff + 1);
        // The vector holding a 1 at the first differing index is larger.
        return (a.words_[w] & lowest) != 0 ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  const std::vector<word_type>& words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(length_);
    for (auto w : words_) {
      h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  void check_length(const BitVector& other) const {
    if (other.length_ != length_) {
      throw std::invalid_argument("bitvector length mismatch: " + std::to_string(length_) +
                                  " vs " + std::to_string(other.length_));
    }
  }

  std::size_t length_ = 0;
  std::vector<word_type> words_;
};

}  // namespace sigswitch

template <>
struct std::hash<sigswitch::BitVector> {
  std::size_t operator()(const sigswitch::BitVector& v) const noexcept { return v.hash(); }
};
