#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace piw {

/// A subset of the elements of a fixed finite group, indexed by the group's
/// element order. Used as the identity of a subgroup.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  ElementSet operator&(const ElementSet& other) const {
    ElementSet r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
    return r;
  }

  ElementSet operator|(const ElementSet& other) const {
    ElementSet r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | other.words_[i];
    return r;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        out.push_back(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Total order: the set holding the least element of the symmetric difference is smaller.
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      if (a.words_[w] == b.words_[w]) continue;
      std::uint64_t diff = a.words_[w] ^ b.words_[w];
      std::uint64_t low = diff & (~diff + 1);
      return (a.words_[w] & low) != 0;
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 17);
    return h;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace piw
