#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace piw {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}. Externally points are written 1-based
/// in cycle notation. Products act on the right: x^(g*h) = (x^g)^h.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws InputError unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  /// Parses 1-based cycle notation such as "(1,2)(3,4)" or "()".
  static Permutation parse(std::string_view text, std::size_t degree);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation& operator*=(const Permutation& other);
  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;
  /// g^-1 * this * g
  Permutation conjugate(const Permutation& g) const;

  bool is_identity() const;
  std::uint64_t order() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// [a, b] = a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

}  // namespace piw
