#include <doctest.h>

#include "piw/char_table.hpp"
#include "piw/errors.hpp"
#include "piw/numtheory.hpp"
#include "piw/pi_partial.hpp"
#include "piw/pi_structure.hpp"
#include "piw/subgroups.hpp"
#include "support.hpp"

using namespace piw;
using test::group;

namespace {

std::vector<long> ints(const PartialCharacter& f) {
  std::vector<long> out;
  for (const auto& v : f.values()) {
    const auto r = v.as_rational_integer();
    out.push_back(r ? r->get_si() : 999999);
  }
  return out;
}

std::vector<PiConfig> all_pis(std::uint64_t order) {
  std::vector<PiConfig> out{PiConfig{}};
  for (auto p : prime_divisors(order)) {
    const auto n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto s = out[i].listed();
      s.insert(p);
      out.push_back(PiConfig::of(s));
    }
  }
  return out;
}

ElementSet generated(const FiniteGroup& g, const std::vector<std::string>& gens) {
  std::vector<std::size_t> idx;
  for (const auto& s : gens) idx.push_back(g.index(Permutation::parse(s, g.degree())));
  return g.generated(idx);
}

}  // namespace

TEST_CASE("restriction to pi-elements") {
  const auto s3 = group("S3");
  const auto t = character_table(s3);
  const PiConfig three = PiConfig::of({3});
  CHECK(ints(restrict_to_pi(t[1], three)) == std::vector<long>{1, 1});
  CHECK(ints(restrict_to_pi(t[0], three)) == std::vector<long>{1, 1});
  CHECK(ints(restrict_to_pi(t[2], three)) == std::vector<long>{2, -1});
  // all primes: chi^0 = chi
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(restrict_to_pi(t[i], PiConfig::all()).values() == t[i].values());
}

TEST_CASE("I_pi for S3") {
  const auto s3 = group("S3");
  const auto t = character_table(s3);
  const PartialBasis b3(t, make_pi_class_data(s3, PiConfig::of({3})));
  REQUIRE(b3.size() == 2);
  CHECK(ints(b3[0]) == std::vector<long>{1, 1});
  CHECK(ints(b3[1]) == std::vector<long>{2, -1});

  const PartialBasis b2(t, make_pi_class_data(s3, PiConfig::of({2})));
  REQUIRE(b2.size() == 2);
  CHECK(ints(b2[0]) == std::vector<long>{1, 1});
  CHECK(ints(b2[1]) == std::vector<long>{1, -1});
  CHECK(b2.decompose(restrict_to_pi(t[2], PiConfig::of({2}))) == std::vector<std::int64_t>{1, 1});

  const PartialBasis ball(t, make_pi_class_data(s3, PiConfig::all()));
  CHECK(ball.size() == t.size());
}

TEST_CASE("I_pi basis invariants over the corpus") {
  for (const auto& spec : builtin_corpus()) {
    const auto g = build_group(spec);
    const auto t = character_table(g);
    for (const auto& pi : all_pis(g->order())) {
      if (!is_pi_separable(*g, pi)) {
        CHECK_THROWS_AS(PartialBasis(t, make_pi_class_data(g, pi)), DomainError);
        continue;
      }
      CAPTURE(spec.name);
      CAPTURE(pi.to_string());
      const auto data = make_pi_class_data(g, pi);
      const PartialBasis b(t, data);
      CHECK(b.size() == data->size());
      const auto& d = b.decomposition_matrix();
      REQUIRE(d.size() == t.size());
      for (std::size_t i = 0; i < t.size(); ++i) {
        // recombine the row and compare with chi^0 computed afresh
        std::vector<Cyclotomic> sum(data->size());
        for (std::size_t j = 0; j < b.size(); ++j) {
          CHECK(d[i][j] >= 0);
          for (std::size_t c = 0; c < data->size(); ++c) sum[c] += b[j][c] * Rational(d[i][j]);
        }
        for (std::size_t c = 0; c < data->size(); ++c) CHECK(sum[c] == t[i][data->classes()[c]]);
      }
      // every member is the restriction of some irreducible it lists as a lift
      for (const auto& phi : b.members()) {
        REQUIRE_FALSE(phi.lifts().empty());
        for (auto l : phi.lifts()) CHECK(restrict_to_pi(t[l], data) == phi);
      }
    }
  }
}

TEST_CASE("partial induction") {
  const auto s3 = group("S3");
  const PiConfig three = PiConfig::of({3});
  const auto c3 = make_finite_group(make_group(3, {Permutation::parse("(1,2,3)", 3)}));
  const auto tc3 = character_table(c3);
  const auto target = make_pi_class_data(s3, three);
  const auto up = induce_partial(restrict_to_pi(tc3[1], three), target);
  CHECK(ints(up) == std::vector<long>{2, -1});
  CHECK(up.degree() == 2);
  // trivial subgroup: the regular character on pi-elements
  const auto one = make_finite_group(make_group(3, {}));
  const auto reg = induce_partial(restrict_to_pi(ClassFunction::trivial(one), three), target);
  CHECK(ints(reg) == std::vector<long>{6, 0});
  // partial induction agrees with ordinary induction restricted to pi-elements
  const auto s4 = group("S4");
  for (const auto& pi : all_pis(24)) {
    const auto t4 = make_pi_class_data(s4, pi);
    for (const auto& cls : subgroups_up_to_conjugacy(s4)) {
      const auto u = make_finite_group(s4->to_group(cls.elements));
      const auto tu = character_table(u);
      for (const auto& theta : tu.irreducibles()) {
        CHECK(induce_partial(restrict_to_pi(theta, pi), t4) == restrict_to_pi(induce(theta, s4), t4));
      }
    }
  }
}

TEST_CASE("constituents over a normal subgroup") {
  const auto s3 = group("S3");
  const PiConfig three = PiConfig::of({3});
  const PartialBasis b(character_table(s3), make_pi_class_data(s3, three));
  const auto c3 = make_finite_group(make_group(3, {Permutation::parse("(1,2,3)", 3)}));
  const PartialBasis kb(character_table(c3), make_pi_class_data(c3, three));
  const auto over = constituents_over_normal(b[1], kb);
  REQUIRE(over.size() == 2);
  for (const auto& [idx, m] : over) {
    CHECK(idx != 0);
    CHECK(m == 1);
  }
  const auto triv = constituents_over_normal(b[0], kb);
  REQUIRE(triv.size() == 1);
  CHECK(triv[0] == std::pair<std::size_t, std::int64_t>{0, 1});
  const auto self = constituents_over_normal(b[1], b);
  CHECK(self == std::vector<std::pair<std::size_t, std::int64_t>>{{1, 1}});
  const auto c2 = make_finite_group(make_group(3, {Permutation::parse("(1,2)", 3)}));
  const PartialBasis c2b(character_table(c2), make_pi_class_data(c2, three));
  CHECK_THROWS_AS(constituents_over_normal(b[1], c2b), DomainError);
}

TEST_CASE("Clifford correspondents") {
  const auto s3 = group("S3");
  const PiConfig three = PiConfig::of({3});
  const PartialBasis b(character_table(s3), make_pi_class_data(s3, three));
  const auto c3 = make_finite_group(make_group(3, {Permutation::parse("(1,2,3)", 3)}));
  const PartialBasis kb(character_table(c3), make_pi_class_data(c3, three));
  // nontrivial theta: stabilizer C3, correspondent theta itself
  const ElementSet stab = partial_stabilizer(*s3, kb, 1);
  CHECK(stab.count() == 3);
  const std::size_t alpha = clifford_correspondent(b[1], kb, 1, kb);
  CHECK(alpha == 1);
  // G-invariant theta: G_theta = G and alpha = phi
  CHECK(partial_stabilizer(*s3, kb, 0).count() == 6);
  CHECK(clifford_correspondent(b[0], kb, 0, b) == 0);
  // K = 1
  const auto one = make_finite_group(make_group(3, {}));
  const PartialBasis ob(character_table(one), make_pi_class_data(one, three));
  CHECK(clifford_correspondent(b[1], ob, 0, b) == 1);
  CHECK_THROWS_AS(clifford_correspondent(b[0], kb, 1, kb), DomainError);
}

TEST_CASE("conjugation action") {
  const auto s3 = group("S3");
  const auto c3 = make_finite_group(make_group(3, {Permutation::parse("(1,2,3)", 3)}));
  const PartialBasis kb(character_table(c3), make_pi_class_data(c3, PiConfig::of({3})));
  const auto act = conjugation_action(kb, Permutation::parse("(1,2)", 3));
  CHECK(act == std::vector<std::size_t>{0, 2, 1});
  CHECK(conjugation_action(kb, Permutation::parse("(1,2,3)", 3)) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("transfer to a quotient by a normal pi'-subgroup") {
  const auto c6 = group("C6");
  const PiConfig three = PiConfig::of({3});
  const QuotientGroup q(c6, generated(*c6, {"(1,2)"}));
  const auto qg = make_finite_group(q.group());
  const auto target = make_pi_class_data(qg, three);
  const PartialBasis b(character_table(c6), make_pi_class_data(c6, three));
  const PartialBasis bq(character_table(qg), target);
  REQUIRE(b.size() == 3);
  REQUIRE(bq.size() == 3);
  std::set<std::size_t> images;
  for (const auto& phi : b.members()) {
    const auto bar = quotient_transfer(phi, q, target);
    CHECK(bar.degree() == phi.degree());
    const auto idx = bq.index_of(bar);
    CHECK(idx < bq.size());
    images.insert(idx);
  }
  CHECK(images.size() == 3);
  CHECK(bq.index_of(quotient_transfer(b[0], q, target)) == 0);
}

TEST_CASE("inflation") {
  const auto s4 = group("S4");
  const QuotientGroup q(s4, o_pi_core_set(*s4, PiConfig::of({2})));
  const auto qg = make_finite_group(q.group());
  const auto tq = character_table(qg);
  const auto t4 = character_table(s4);
  std::size_t found = 0;
  for (const auto& tau : tq.irreducibles()) found += t4.index_of(inflate(tau, q)) < t4.size() ? 1 : 0;
  CHECK(found == 3);
}
