#include <doctest.h>

#include "piw/char_table.hpp"
#include "piw/errors.hpp"
#include "piw/pi_structure.hpp"
#include "piw/subgroups.hpp"
#include "support.hpp"
#include "table_oracle.hpp"

using namespace piw;
using test::group;
using test::near;
using test::Row;
using test::class_algebra_table;
using test::same_row;

namespace {

Row numeric(const ClassFunction& f) {
  Row out;
  for (const auto& v : f.values()) out.push_back(v.evaluate());
  return out;
}

std::vector<std::uint64_t> degrees(const CharacterTable& t) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.degree(i));
  return out;
}

/// theta^G at each class of G, summed over all elements: (1/|U|) sum_x theta(x g x^-1).
Row brute_induce(const FiniteGroup& g, const FiniteGroup& u, const ClassFunction& theta) {
  Row out;
  for (const auto& c : g.classes()) {
    std::complex<double> s = 0;
    for (std::size_t x = 0; x < g.elements().size(); ++x) {
      const Permutation y = g.element(c.representative).conjugate(g.element(x));
      if (auto idx = u.find(y)) s += theta[u.class_of(*idx)].evaluate();
    }
    out.push_back(s / static_cast<double>(u.order()));
  }
  return out;
}

}  // namespace

TEST_CASE("small tables") {
  CHECK(degrees(character_table(group("S3"))) == std::vector<std::uint64_t>{1, 1, 2});
  CHECK(degrees(character_table(group("Q8"))) == std::vector<std::uint64_t>{1, 1, 1, 1, 2});
  CHECK(degrees(character_table(group("S4"))) == std::vector<std::uint64_t>{1, 1, 2, 3, 3});
  CHECK(degrees(character_table(group("A5"))) == std::vector<std::uint64_t>{1, 3, 3, 4, 5});
  CHECK(degrees(character_table(group("GL(2,3)"))) == std::vector<std::uint64_t>{1, 1, 2, 2, 2, 3, 3, 4});
}

TEST_CASE("cyclic groups give the DFT") {
  const auto g = test::group_from(6, {"(1,2,3,4,5,6)"});
  const auto t = character_table(g);
  REQUIRE(t.size() == 6);
  const Permutation gen = Permutation::parse("(1,2,3,4,5,6)", 6);
  for (std::size_t i = 0; i < t.size(); ++i) {
    // every character is a homomorphism, and they are pairwise distinct
    const auto c1 = g->class_of(g->index(gen));
    const Cyclotomic v = t[i][c1];
    Cyclotomic p(1);
    for (int k = 0; k < 6; ++k) {
      CHECK(t[i][g->class_of(g->index(gen.pow(k)))] == p);
      p *= v;
    }
  }
}

TEST_CASE("orthogonality over the corpus") {
  for (const auto& spec : builtin_corpus()) {
    CAPTURE(spec.name);
    const auto g = build_group(spec);
    const auto t = character_table(g);
    CHECK(t.size() == g->classes().size());
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      sum += t.degree(i) * t.degree(i);
      for (std::size_t j = 0; j < t.size(); ++j) {
        CHECK(inner_product(t[i], t[j]) == Rational(i == j ? 1 : 0));
      }
    }
    CHECK(sum == g->order());
    // column orthogonality
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        Cyclotomic s;
        for (std::size_t i = 0; i < t.size(); ++i) s += t[i][a] * t[i][b].conj();
        CHECK(s == Cyclotomic(a == b ? static_cast<long>(g->classes()[a].centralizer_order) : 0));
      }
    }
    const auto ds = degrees(t);
    CHECK(t.decompose(ClassFunction::regular(g)) == std::vector<std::int64_t>(ds.begin(), ds.end()));
  }
}

TEST_CASE("class-sum oracle for groups of order at most 24") {
  for (const auto& spec : builtin_corpus()) {
    const auto g = build_group(spec);
    if (g->order() > 24) continue;
    CAPTURE(spec.name);
    const auto t = character_table(g);
    auto oracle = class_algebra_table(*g);
    REQUIRE(oracle.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Row row = numeric(t[i]);
      const auto hit = std::find_if(oracle.begin(), oracle.end(), [&](const Row& o) { return same_row(o, row); });
      CHECK(hit != oracle.end());
      if (hit != oracle.end()) oracle.erase(hit);
    }
    CHECK(oracle.empty());
  }
}

TEST_CASE("inner products") {
  const auto s4 = group("S4");
  const auto t = character_table(s4);
  const auto triv = ClassFunction::trivial(s4);
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(inner_product(t[i], t[i]) == Rational(1));
    CHECK(inner_product(ClassFunction::regular(s4), t[i]) == Rational(static_cast<long>(t.degree(i))));
  }
  // the degree-3 character with value 1 on transpositions
  std::size_t std3 = t.size();
  const std::size_t transposition = s4->class_of(s4->index(Permutation::parse("(1,2)", 4)));
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.degree(i) == 3 && t[i][transposition] == Cyclotomic(1)) std3 = i;
  }
  REQUIRE(std3 < t.size());
  CHECK(inner_product(t[std3] * t[std3], triv) == Rational(1));
}

TEST_CASE("induction and restriction") {
  const auto s3 = group("S3");
  const auto t = character_table(s3);
  const auto c3 = make_finite_group(make_group(3, {Permutation::parse("(1,2,3)", 3)}));
  const auto ind = induce(ClassFunction::trivial(c3), s3);
  CHECK(ind.degree() == 2);
  CHECK(inner_product(ind, ClassFunction::trivial(s3)) == Rational(1));
  CHECK(same_row(numeric(ind), brute_induce(*s3, *c3, ClassFunction::trivial(c3))));
  CHECK(restrict_to(ClassFunction::trivial(s3), c3) == ClassFunction::trivial(c3));

  const auto tc3 = character_table(c3);
  const auto res = restrict_to(t[2], c3);
  CHECK(res == tc3[1] + tc3[2]);

  // Frobenius reciprocity and the explicit formula on every subgroup of S4
  const auto s4 = group("S4");
  const auto t4 = character_table(s4);
  for (const auto& cls : subgroups_up_to_conjugacy(s4)) {
    const auto u = make_finite_group(s4->to_group(cls.elements));
    const auto tu = character_table(u);
    for (std::size_t j = 0; j < tu.size(); ++j) {
      const auto up = induce(tu[j], s4);
      CHECK(same_row(numeric(up), brute_induce(*s4, *u, tu[j])));
      for (std::size_t i = 0; i < t4.size(); ++i) {
        CHECK(inner_product(up, t4[i]) == inner_product(tu[j], restrict_to(t4[i], u)));
      }
    }
  }
}

TEST_CASE("determinantal order") {
  const auto s3 = group("S3");
  const auto t = character_table(s3);
  CHECK(determinant_order(ClassFunction::trivial(s3)) == 1);
  CHECK(t.determinant_order(2) == 2);
  CHECK(determinant(t[2]) == t[1]);
  const std::size_t r3 = s3->class_of(s3->index(Permutation::parse("(1,2,3)", 3)));
  auto mult = eigenvalue_multiplicities(t[2], r3);
  CHECK(mult == std::vector<std::uint64_t>{0, 1, 1});
  const std::size_t r2 = s3->class_of(s3->index(Permutation::parse("(1,2)", 3)));
  CHECK(eigenvalue_multiplicities(t[2], r2) == std::vector<std::uint64_t>{1, 1});

  const auto s4 = group("S4");
  const auto t4 = character_table(s4);
  CHECK(t4.determinant_order(1) == 2);
  // det of a linear character is the character itself
  for (const auto& spec : builtin_corpus()) {
    const auto g = build_group(spec);
    const auto tg = character_table(g);
    for (std::size_t i = 0; i < tg.size(); ++i) {
      if (tg.degree(i) == 1) CHECK(determinant(tg[i]) == tg[i]);
      CHECK(g->exponent() % tg.determinant_order(i) == 0);
    }
  }
  CHECK_THROWS_AS(eigenvalue_multiplicities(t[2] + t[2] * Rational(1, 2), r3), DomainError);
}

TEST_CASE("pi-special characters") {
  const auto s4 = group("S4");
  const auto t4 = character_table(s4);
  const PiConfig two = PiConfig::of({2});
  for (const auto& pi : {two, PiConfig::of({3}), PiConfig{}}) {
    CHECK(is_pi_special(ClassFunction::trivial(s4), pi));
  }
  CHECK(is_pi_special(t4[1], two));   // sign
  CHECK_FALSE(is_pi_special(t4[2], two));  // A4-constituents have determinantal order 3
  CHECK_FALSE(is_pi_special(t4[3], PiConfig::of({3})));  // V4-constituents have determinantal order 2
}

TEST_CASE("pi'-defect zero") {
  const auto s3 = group("S3");
  const auto t = character_table(s3);
  CHECK(has_pi_prime_defect_zero(t[2], PiConfig::of({3})));
  CHECK_FALSE(has_pi_prime_defect_zero(ClassFunction::trivial(s3), PiConfig::of({3})));
  const auto s4 = group("S4");
  const auto t4 = character_table(s4);
  for (const auto& chi : t4.irreducibles()) CHECK(has_pi_prime_defect_zero(chi, PiConfig::all()));
}

TEST_CASE("table export") {
  const auto json = character_table(group("S3")).to_json();
  CHECK(json.find("\"characters\"") != std::string::npos);
  CHECK(json.find("\"classes\"") != std::string::npos);
  const auto c3 = character_table(test::group("C3")).to_json();
  CHECK(c3.find("E(3)") != std::string::npos);
}
