#include "piw/pi_config.hpp"

#include <sstream>

#include "piw/errors.hpp"
#include "piw/numtheory.hpp"

namespace piw {

PiConfig PiConfig::of(std::set<std::uint64_t> primes) {
  for (auto p : primes) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
  }
  PiConfig c;
  c.listed_ = std::move(primes);
  return c;
}

PiConfig PiConfig::all() {
  PiConfig c;
  c.cofinite_ = true;
  return c;
}

PiConfig PiConfig::all_except(std::set<std::uint64_t> primes) {
  PiConfig c = of(std::move(primes));
  c.cofinite_ = true;
  return c;
}

bool PiConfig::contains(std::uint64_t prime) const {
  return cofinite_ ? listed_.count(prime) == 0 : listed_.count(prime) != 0;
}

PiConfig PiConfig::complement() const {
  PiConfig c = *this;
  c.cofinite_ = !cofinite_;
  return c;
}

bool PiConfig::is_number(std::uint64_t n) const {
  for (auto p : prime_divisors(n)) {
    if (!contains(p)) return false;
  }
  return true;
}

std::uint64_t PiConfig::part(std::uint64_t n) const {
  std::uint64_t result = 1;
  for (auto p : prime_divisors(n)) {
    if (!contains(p)) continue;
    while (n % p == 0) {
      n /= p;
      result *= p;
    }
  }
  return result;
}

std::vector<std::uint64_t> PiConfig::primes_dividing(std::uint64_t n) const {
  std::vector<std::uint64_t> out;
  for (auto p : prime_divisors(n)) {
    if (contains(p)) out.push_back(p);
  }
  return out;
}

std::string PiConfig::to_string() const {
  std::ostringstream out;
  if (cofinite_) {
    out << "all";
    if (listed_.empty()) return out.str();
    out << "\\";
  }
  out << '{';
  bool first = true;
  for (auto p : listed_) {
    if (!first) out << ',';
    out << p;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace piw
