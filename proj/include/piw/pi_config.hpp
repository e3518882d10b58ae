#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace piw {

/// A set of primes pi. Either a finite set, or the complement of a finite set
/// (so that both pi and pi' are representable exactly).
class PiConfig {
 public:
  PiConfig() = default;  // the empty set
  static PiConfig of(std::set<std::uint64_t> primes);
  static PiConfig all();
  static PiConfig all_except(std::set<std::uint64_t> primes);

  bool contains(std::uint64_t prime) const;
  PiConfig complement() const;

  /// True iff every prime divisor of n lies in the set (n = 1 qualifies).
  bool is_number(std::uint64_t n) const;
  /// Largest divisor of n that is a number of this set.
  std::uint64_t part(std::uint64_t n) const;
  /// The primes dividing n that lie in the set.
  std::vector<std::uint64_t> primes_dividing(std::uint64_t n) const;

  bool is_cofinite() const { return cofinite_; }
  const std::set<std::uint64_t>& listed() const { return listed_; }

  /// "{2,3}", "all", "all\{2}" or "{}".
  std::string to_string() const;

  friend bool operator==(const PiConfig&, const PiConfig&) = default;
  friend bool operator<(const PiConfig& a, const PiConfig& b) {
    if (a.cofinite_ != b.cofinite_) return a.cofinite_ < b.cofinite_;
    return a.listed_ < b.listed_;
  }

 private:
  std::set<std::uint64_t> listed_;
  bool cofinite_ = false;
};

}  // namespace piw
