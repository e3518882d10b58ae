#include <doctest.h>

#include <random>

#include "piw/cyclotomic.hpp"
#include "piw/errors.hpp"
#include "piw/numtheory.hpp"
#include "support.hpp"

using namespace piw;
using test::near;

namespace {

Cyclotomic z(std::uint64_t e, std::int64_t k = 1) { return Cyclotomic::root_of_unity(e, k); }

std::complex<double> zc(std::uint64_t e, std::int64_t k) {
  const double t = 2.0 * 3.14159265358979323846 * static_cast<double>(k) / static_cast<double>(e);
  return {std::cos(t), std::sin(t)};
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  for (std::uint64_t n = 1; n <= 60; ++n) CHECK(cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
}

TEST_CASE("basic identities") {
  CHECK(z(3) + z(3, 2) == Cyclotomic(-1));
  CHECK(z(4) * z(4) == Cyclotomic(-1));
  CHECK((Cyclotomic(1) + z(5) + z(5, 2) + z(5, 3) + z(5, 4)).is_zero());
  CHECK(z(3).galois_conjugate(2) == z(3, 2));
  CHECK(Cyclotomic(Rational(3, 7)).galois_conjugate(5) == Cyclotomic(Rational(3, 7)));
  const Cyclotomic r2 = z(8) + z(8, -1);
  CHECK(r2.galois_conjugate(3) == -r2);
  CHECK(r2 * r2 == Cyclotomic(2));
  CHECK_THROWS_AS(z(8).galois_conjugate(2), DomainError);
}

TEST_CASE("rationality") {
  CHECK(Cyclotomic(-1).as_rational() == Rational(-1));
  CHECK_FALSE(z(3).as_rational().has_value());
  const Cyclotomic i_root3 = z(6) - z(6, 5);
  CHECK_FALSE(i_root3.as_rational().has_value());
  CHECK(i_root3 * i_root3 == Cyclotomic(-3));
  CHECK((z(7, 3) * z(7, 4)).as_rational() == Rational(1));
}

TEST_CASE("lifting keeps the value") {
  const Cyclotomic a = z(6) + Cyclotomic(2) * z(6, 5);
  const Cyclotomic b = a.lifted(24);
  CHECK(b.conductor() == 24);
  CHECK(a == b);
  CHECK(near(a.evaluate(), b.evaluate()));
  CHECK_THROWS(a.lifted(20));
}

TEST_CASE("moving to a smaller field") {
  const Cyclotomic r = Cyclotomic(2).lifted(6);
  CHECK(r.in_conductor(5) == Cyclotomic(2));
  CHECK(z(3).lifted(12).in_conductor(15) == z(3));
  CHECK((z(12, 4) + z(12, 8)).in_conductor(3) == Cyclotomic(-1));
  CHECK_FALSE(z(4).in_conductor(3).has_value());
  CHECK_FALSE(z(12).in_conductor(6).has_value());
}

TEST_CASE("arithmetic against floating point") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (std::uint64_t e : {1, 2, 3, 4, 5, 8, 9, 12, 15, 24, 30}) {
    for (int trial = 0; trial < 20; ++trial) {
      Cyclotomic a, b;
      std::complex<double> an, bn;
      for (std::uint64_t k = 0; k < e; ++k) {
        const int x = coef(rng), y = coef(rng);
        a += z(e, static_cast<std::int64_t>(k)) * Rational(x);
        b += z(e, static_cast<std::int64_t>(k)) * Rational(y);
        an += static_cast<double>(x) * zc(e, static_cast<std::int64_t>(k));
        bn += static_cast<double>(y) * zc(e, static_cast<std::int64_t>(k));
      }
      CAPTURE(e);
      CHECK(near(a.evaluate(), an));
      CHECK(near((a + b).evaluate(), an + bn));
      CHECK(near((a - b).evaluate(), an - bn));
      CHECK(near((a * b).evaluate(), an * bn, 1e-6));
      CHECK(near(a.conj().evaluate(), std::conj(an)));
      CHECK(((a * b) == (b * a)));
    }
  }
}

TEST_CASE("mixed conductors") {
  const Cyclotomic s = z(4) + z(3);
  CHECK(near(s.evaluate(), zc(4, 1) + zc(3, 1)));
  CHECK(s.conductor() % 12 == 0);
  CHECK(z(4) * z(3) == z(12, 7));
}

TEST_CASE("display form") {
  CHECK(Cyclotomic(-1).to_string() == "-1");
  CHECK(Cyclotomic(Rational(1, 2)).to_string() == "1/2");
  CHECK(z(3).to_string() == "E(3)");
  // power basis mod the cyclotomic polynomial
  CHECK(z(3, 2).to_string() == "-1-E(3)");
  CHECK(z(8, 3).to_string() == "E(8)^3");
}

TEST_CASE("modular reduction") {
  const std::uint64_t e = 12;
  const std::uint64_t p = least_prime_one_mod(e, 100);
  CHECK(is_prime(p));
  CHECK(p % e == 1);
  const ModularEmbedding m(e, p);
  CHECK(powmod(m.root(1), e, p) == 1);
  CHECK(powmod(m.root(1), e / 2, p) != 1);
  CHECK(powmod(m.root(1), e / 3, p) != 1);
  const Cyclotomic a = z(12, 5) + z(4);
  const Cyclotomic b = z(3) - Cyclotomic(2);
  CHECK(m(a * b) == mulmod(m(a), m(b), p));
  CHECK(m(a + b) == (m(a) + m(b)) % p);
}
