#pragma once

#include <cstdint>
#include <vector>

namespace piw {

bool is_prime(std::uint64_t n);
/// Distinct prime divisors in ascending order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
/// A generator of the multiplicative group mod a prime p.
std::uint64_t primitive_root(std::uint64_t p);

}  // namespace piw
