#include "piw/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "piw/errors.hpp"
#include "piw/numtheory.hpp"

namespace piw {

namespace {

std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> num,
                                            const std::vector<std::int64_t>& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    std::int64_t c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

std::uint64_t common_conductor(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (auto d : divisors(n)) {
    if (d == n) continue;
    auto it = cache.find(d);
    std::vector<std::int64_t> phi_d;
    if (it == cache.end()) {
      // Recursion would re-lock; compute the divisor polynomial in place.
      std::vector<std::int64_t> q(d + 1, 0);
      q[0] = -1;
      q[d] = 1;
      for (auto dd : divisors(d)) {
        if (dd == d) continue;
        q = poly_divide_exact(q, cache.at(dd));
      }
      it = cache.emplace(d, q).first;
    }
    poly = poly_divide_exact(poly, it->second);
  }
  return cache.emplace(n, poly).first->second;
}

std::vector<Rational> Cyclotomic::reduce(std::uint64_t e, std::vector<Rational> poly) {
  const auto& phi = cyclotomic_polynomial(e);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (poly[k] == 0) continue;
    const Rational c = poly[k];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) poly[k - deg + j] -= c * phi[j];
    }
    poly[k] = 0;
  }
  poly.resize(deg);
  return poly;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t e, std::int64_t k) {
  if (e == 0) throw DomainError("root_of_unity: conductor must be positive");
  auto m = static_cast<std::int64_t>(e);
  std::int64_t r = ((k % m) + m) % m;
  std::vector<Rational> poly(static_cast<std::size_t>(r) + 1, 0);
  poly[static_cast<std::size_t>(r)] = 1;
  return Cyclotomic(e, reduce(e, std::move(poly)));
}

Cyclotomic Cyclotomic::from_exponents(std::uint64_t e, const std::vector<Rational>& coeffs) {
  if (e == 0 || coeffs.size() > e) throw DomainError("from_exponents: bad conductor");
  return Cyclotomic(e, reduce(e, coeffs));
}

Cyclotomic Cyclotomic::lifted(std::uint64_t e) const {
  if (e == conductor_) return *this;
  if (e % conductor_ != 0) {
    throw DomainError("cannot express a value of conductor " + std::to_string(conductor_) +
                      " in conductor " + std::to_string(e));
  }
  const std::uint64_t step = e / conductor_;
  std::vector<Rational> poly(coeffs_.size() == 0 ? 1 : (coeffs_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  return Cyclotomic(e, reduce(e, std::move(poly)));
}

std::optional<Cyclotomic> Cyclotomic::in_conductor(std::uint64_t e) const {
  if (e == 0) throw DomainError("in_conductor: conductor must be positive");
  if (e % conductor_ == 0) return lifted(e);
  // solve sum_j c_j zeta_d^j = value for d = gcd(e, conductor), by elimination
  const std::uint64_t d = std::gcd(e, conductor_);
  const std::size_t unknowns = euler_phi(d);
  const std::size_t rows = coeffs_.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(unknowns + 1, 0));
  for (std::size_t j = 0; j < unknowns; ++j) {
    const Cyclotomic col = root_of_unity(d, static_cast<std::int64_t>(j)).lifted(conductor_);
    for (std::size_t r = 0; r < rows; ++r) m[r][j] = col.coeffs_[r];
  }
  for (std::size_t r = 0; r < rows; ++r) m[r][unknowns] = coeffs_[r];
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < unknowns && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const Rational inv = 1 / m[rank][c];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= unknowns; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (m[r][unknowns] != 0) return std::nullopt;
  }
  std::vector<Rational> c(unknowns, 0);
  for (std::size_t r = 0; r < rank; ++r) c[pivot_col[r]] = m[r][unknowns];
  return Cyclotomic(d, std::move(c)).lifted(e);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (other.conductor_ != conductor_) {
    const std::uint64_t e = common_conductor(conductor_, other.conductor_);
    *this = lifted(e);
    return *this += other.lifted(e);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  if (other.conductor_ != conductor_) {
    const std::uint64_t e = common_conductor(conductor_, other.conductor_);
    *this = lifted(e);
    return *this -= other.lifted(e);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.conductor_ != conductor_) {
    if (other.conductor_ == 1) return *this *= other.coeffs_[0];
    const std::uint64_t e = common_conductor(conductor_, other.conductor_);
    *this = lifted(e);
    return *this *= other.lifted(e);
  }
  const std::size_t n = coeffs_.size();
  std::vector<Rational> poly(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (other.coeffs_[j] != 0) poly[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = reduce(conductor_, std::move(poly));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& r) {
  if (r == 0) throw DomainError("division by zero");
  for (auto& c : coeffs_) c /= r;
  return *this;
}

Cyclotomic Cyclotomic::galois_conjugate(std::int64_t k) const {
  auto m = static_cast<std::int64_t>(conductor_);
  std::int64_t kk = ((k % m) + m) % m;
  if (std::gcd(static_cast<std::uint64_t>(kk), conductor_) != 1 && conductor_ != 1) {
    throw DomainError("galois_conjugate: " + std::to_string(k) + " is not coprime to " +
                      std::to_string(conductor_));
  }
  std::vector<Rational> poly(conductor_, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    poly[static_cast<std::size_t>((static_cast<std::int64_t>(i) * kk) % m)] += coeffs_[i];
  }
  return Cyclotomic(conductor_, reduce(conductor_, std::move(poly)));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

std::optional<Integer> Cyclotomic::as_rational_integer() const {
  auto r = as_rational();
  if (!r || r->get_den() != 1) return std::nullopt;
  return Integer(r->get_num());
}

bool Cyclotomic::has_integer_coefficients() const {
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

std::complex<double> Cyclotomic::evaluate() const {
  std::complex<double> sum = 0;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    double angle = two_pi * static_cast<double>(k) / static_cast<double>(conductor_);
    sum += coeffs_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (negative) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << '*';
      out << "E(" << conductor_ << ')';
      if (k > 1) out << '^' << k;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::uint64_t e = common_conductor(a.conductor_, b.conductor_);
  return a.lifted(e).coeffs_ == b.lifted(e).coeffs_;
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) {
    const std::uint64_t e = common_conductor(a.conductor_, b.conductor_);
    return a.lifted(e) < b.lifted(e);
  }
  return a.coeffs_ < b.coeffs_;
}

}  // namespace piw

namespace piw {

std::uint64_t least_prime_one_mod(std::uint64_t e, std::uint64_t lower_bound) {
  std::uint64_t p = (lower_bound / e + 1) * e + 1;
  while (!is_prime(p)) p += e;
  return p;
}

ModularEmbedding::ModularEmbedding(std::uint64_t conductor, std::uint64_t prime)
    : conductor_(conductor), prime_(prime) {
  if (conductor == 0 || (prime - 1) % conductor != 0 || !is_prime(prime)) {
    throw DomainError("ModularEmbedding: need a prime p = 1 mod " + std::to_string(conductor));
  }
  const std::uint64_t z = powmod(primitive_root(prime), (prime - 1) / conductor, prime);
  powers_.resize(conductor);
  std::uint64_t x = 1;
  for (auto& w : powers_) {
    w = x;
    x = mulmod(x, z, prime);
  }
}

std::uint64_t ModularEmbedding::root(std::int64_t k) const {
  auto m = static_cast<std::int64_t>(conductor_);
  return powers_[static_cast<std::size_t>(((k % m) + m) % m)];
}

std::uint64_t ModularEmbedding::operator()(const Cyclotomic& value) const {
  if (conductor_ % value.conductor() != 0) {
    throw DomainError("ModularEmbedding: conductor " + std::to_string(value.conductor()) +
                      " does not divide " + std::to_string(conductor_));
  }
  const std::uint64_t step = conductor_ / value.conductor();
  const Integer p(static_cast<unsigned long>(prime_));
  std::uint64_t sum = 0;
  const auto& coeffs = value.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Integer num = coeffs[i].get_num() % p;
    if (num < 0) num += p;
    Integer den = coeffs[i].get_den() % p;
    if (den == 0) throw DomainError("ModularEmbedding: denominator divisible by the prime");
    const std::uint64_t c = mulmod(num.get_ui(), invmod(den.get_ui(), prime_), prime_);
    sum = (sum + mulmod(c, powers_[i * step], prime_)) % prime_;
  }
  return sum;
}

}  // namespace piw
