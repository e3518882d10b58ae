#include <doctest.h>

#include <map>

#include "piw/errors.hpp"
#include "piw/perm_group.hpp"
#include "piw/pi_structure.hpp"
#include "piw/subgroups.hpp"
#include "support.hpp"

using namespace piw;
using piw::test::group;
using piw::test::group_from;

namespace {

std::vector<std::uint64_t> class_sizes(const FiniteGroup& g) {
  std::vector<std::uint64_t> out;
  for (const auto& c : g.classes()) out.push_back(c.size);
  std::sort(out.begin(), out.end());
  return out;
}

// Conjugation orbits computed directly on permutations.
std::vector<std::uint64_t> brute_class_sizes(const FiniteGroup& g) {
  std::set<Permutation> seen;
  std::vector<std::uint64_t> out;
  for (const auto& x : g.elements()) {
    if (seen.count(x)) continue;
    std::set<Permutation> orbit;
    for (const auto& y : g.elements()) orbit.insert(x.conjugate(y));
    seen.insert(orbit.begin(), orbit.end());
    out.push_back(orbit.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet set_of_elements(const FiniteGroup& g, const std::vector<std::string>& gens) {
  std::vector<std::size_t> idx;
  for (const auto& s : gens) idx.push_back(g.index(Permutation::parse(s, g.degree())));
  return g.generated(idx);
}

}  // namespace

TEST_CASE("permutation parsing and right action") {
  const auto a = Permutation::parse("(1,2)", 3);
  const auto b = Permutation::parse("(1,2,3)", 3);
  CHECK(a.order() == 2);
  CHECK(b.order() == 3);
  // 1^(ab) = (1^a)^b = 2^b = 3
  CHECK((a * b)(0) == 2);
  CHECK(Permutation::parse("()", 4).is_identity());
  CHECK(b.conjugate(a) == b.inverse());
  CHECK_THROWS_AS(Permutation::parse("(1,4)", 3), InputError);
  CHECK_THROWS_AS(Permutation::parse("(1,1)", 3), InputError);
  CHECK_THROWS_AS(Permutation::parse("(1,2", 3), InputError);
  CHECK(Permutation::parse((a * b).to_string(), 3) == a * b);
}

TEST_CASE("group orders") {
  CHECK(make_group(3, {Permutation::parse("(1,2)", 3), Permutation::parse("(1,2,3)", 3)}).order() == 6);
  CHECK(make_group(4, {Permutation::parse("(1,2,3,4)", 4), Permutation::parse("(1,2)", 4)}).order() == 24);
  CHECK(make_group(1, {}).order() == 1);
  const std::map<std::string, std::uint64_t> expected = {
      {"C2", 2},  {"C3", 3},     {"C6", 6},  {"S3", 6},       {"D8", 8},      {"Q8", 8},
      {"A4", 12}, {"S4", 24},    {"SL(2,3)", 24}, {"GL(2,3)", 48}, {"F20", 20}, {"C3:C4", 12},
      {"S3xC3", 18}, {"D12", 12}, {"3^(1+2)", 27}, {"A5", 60}};
  for (const auto& spec : builtin_corpus()) {
    CAPTURE(spec.name);
    const auto g = build_group(spec);
    std::vector<Permutation> gens;
    for (const auto& s : spec.generators) gens.push_back(Permutation::parse(s, spec.degree));
    CHECK(g->order() == test::closure(spec.degree, gens).size());
    CHECK(g->order() == expected.at(spec.name));
  }
}

TEST_CASE("membership agrees with the element list") {
  const auto g = group("S4");
  const auto h = make_group(4, {Permutation::parse("(1,2)(3,4)", 4), Permutation::parse("(1,3)(2,4)", 4)});
  std::size_t inside = 0;
  for (const auto& x : g->elements()) inside += h.contains(x) ? 1 : 0;
  CHECK(inside == 4);
  CHECK(h.is_normal_in(g->perm()));
  CHECK_FALSE(make_group(4, {Permutation::parse("(1,2)", 4)}).is_normal_in(g->perm()));
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(*group("S3")) == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(class_sizes(*group("S4")) == std::vector<std::uint64_t>{1, 3, 6, 6, 8});
  CHECK(class_sizes(*group("C6")) == std::vector<std::uint64_t>(6, 1));
  for (const auto& spec : builtin_corpus()) {
    CAPTURE(spec.name);
    const auto g = build_group(spec);
    CHECK(class_sizes(*g) == brute_class_sizes(*g));
    CHECK(g->classes()[0].size == 1);
    for (const auto& c : g->classes()) CHECK(c.size * c.centralizer_order == g->order());
  }
}

TEST_CASE("normalizers and centralizers") {
  const auto s3 = group("S3");
  CHECK(normalizer(s3->perm(), make_group(3, {Permutation::parse("(1,2)", 3)})).order() == 2);
  const auto s4 = group("S4");
  CHECK(normalizer(s4->perm(), make_group(4, {Permutation::parse("(1,2,3)", 4)})).order() == 6);
  const auto v4 = make_group(4, {Permutation::parse("(1,2)(3,4)", 4), Permutation::parse("(1,3)(2,4)", 4)});
  CHECK(normalizer(s4->perm(), v4).order() == 24);
  CHECK(centralizer(s3->perm(), Permutation::parse("(1,2,3)", 3)).order() == 3);
  const auto q8 = group("Q8");
  const auto z = Permutation::parse("(1,2)(3,6)(4,8)(5,7)", 8);
  REQUIRE(q8->perm().contains(z));
  CHECK(centralizer(q8->perm(), z).order() == 8);

  // brute force on every subgroup of S4
  for (const auto& h : test::all_subgroups(*s4)) {
    std::vector<Permutation> gens;
    for (auto i : h) gens.push_back(s4->element(i));
    const auto hg = make_group(4, gens);
    std::uint64_t count = 0;
    for (std::size_t x = 0; x < s4->elements().size(); ++x) {
      if (test::conjugate_indices(*s4, h, x) == h) ++count;
    }
    CHECK(normalizer(s4->perm(), hg).order() == count);
  }
}

TEST_CASE("C_K(Q) inside SL(2,3)") {
  const auto g = group("SL(2,3)");
  const ElementSet k = o_pi_core_set(*g, PiConfig::of({2}));
  REQUIRE(k.count() == 8);
  const ElementSet q = hall_subgroup_set(*g, PiConfig::of({3}));
  REQUIRE(q.count() == 3);
  std::size_t c = 0;
  for (auto x : k.indices()) {
    bool commutes = true;
    for (auto y : q.indices()) commutes = commutes && g->mul(x, y) == g->mul(y, x);
    c += commutes ? 1 : 0;
  }
  CHECK(c == 2);
  CHECK(centralizer_of_subgroup(g->perm(), g->to_group(q)).order() == 6);
}

TEST_CASE("subgroup classes match brute force") {
  CHECK(subgroups_up_to_conjugacy(group("S3")).size() == 4);
  CHECK(subgroups_up_to_conjugacy(group("S4")).size() == 11);
  CHECK(subgroups_up_to_conjugacy(group("C6")).size() == 4);
  for (const auto& spec : builtin_corpus()) {
    const auto g = build_group(spec);
    if (g->order() > 24) continue;
    CAPTURE(spec.name);
    const auto list = subgroups_up_to_conjugacy(g);
    CHECK(list.size() == test::subgroup_class_count(*g));
    CHECK(list.total_subgroups() == test::all_subgroups(*g).size());
    for (const auto& c : list) CHECK(normalizer_order(*g, c.elements) == c.normalizer_order);
  }
  CHECK(subgroups_up_to_conjugacy(group("A5")).size() == 9);
  CHECK_THROWS_AS(subgroups_up_to_conjugacy(group("S4"), 3), ResourceError);
}

TEST_CASE("pi'-subgroup classes") {
  auto orders = [](const SubgroupClassList& l) {
    std::vector<std::uint64_t> out;
    for (const auto& c : l) out.push_back(c.order);
    return out;
  };
  CHECK(orders(pi_prime_subgroups(group("S3"), PiConfig::of({3}))) == std::vector<std::uint64_t>{1, 2});
  CHECK(orders(pi_prime_subgroups(group("S4"), PiConfig::of({2}))) == std::vector<std::uint64_t>{1, 3});
  CHECK(orders(pi_prime_subgroups(group("S4"), PiConfig::of({2, 3}))) == std::vector<std::uint64_t>{1});
  CHECK(pi_prime_subgroups(group("GL(2,3)"), PiConfig::all()).size() == 1);
}

TEST_CASE("pi-separability") {
  CHECK(is_pi_separable(*group("S4"), PiConfig::of({2})));
  CHECK(is_pi_separable(*group("S4"), PiConfig::of({3})));
  CHECK_FALSE(is_pi_separable(*group("A5"), PiConfig::of({2})));
  CHECK_FALSE(is_pi_separable(*group("A5"), PiConfig::of({3, 5})));
  CHECK(is_pi_separable(*group("A5"), PiConfig::all()));
  CHECK(is_pi_separable(*group("A5"), PiConfig{}));
}

TEST_CASE("cores and Hall subgroups") {
  const auto s4 = group("S4");
  CHECK(o_pi_core_set(*s4, PiConfig::of({2})).count() == 4);
  CHECK(o_pi_core_set(*s4, PiConfig::of({3})).count() == 1);
  const auto d8 = group("D8");
  CHECK(o_pi_core_set(*d8, PiConfig::of({2})).count() == 8);
  CHECK(hall_subgroup_set(*s4, PiConfig::of({3})).count() == 3);
  CHECK(hall_subgroup_set(*group("S3"), PiConfig::of({2})).count() == 2);
  CHECK(hall_subgroup_set(*s4, PiConfig{}).count() == 1);
  for (const auto& spec : builtin_corpus()) {
    const auto g = build_group(spec);
    for (const auto& pi : {PiConfig::of({2}), PiConfig::of({3}), PiConfig::of({2, 3})}) {
      if (!is_pi_separable(*g, pi)) continue;
      CAPTURE(spec.name);
      for (std::uint64_t seed : {1, 2, 7}) {
        const ElementSet h = hall_subgroup_set(*g, pi, seed);
        CHECK(h.count() == pi.part(g->order()));
      }
    }
  }
}

TEST_CASE("quotients") {
  const auto s4 = group("S4");
  const ElementSet v4 = o_pi_core_set(*s4, PiConfig::of({2}));
  const QuotientGroup q(s4, v4);
  CHECK(q.group().order() == 6);
  CHECK_FALSE(is_nilpotent(q.group()));
  CHECK(QuotientGroup(s4, s4->full_set()).group().order() == 1);
  const auto c6 = group("C6");
  const QuotientGroup c3(c6, set_of_elements(*c6, {"(1,2)"}));
  CHECK(c3.group().order() == 3);
  // the natural map is a homomorphism
  for (std::size_t a = 0; a < s4->elements().size(); ++a) {
    for (std::size_t b = 0; b < s4->elements().size(); b += 5) {
      CHECK(q.image(s4->mul(a, b)) == q.image(a) * q.image(b));
    }
  }
  CHECK_THROWS_AS(quotient_group(s4, set_of_elements(*s4, {"(1,2)"})), DomainError);
}

TEST_CASE("normal subgroups and chief series") {
  const auto s4 = group("S4");
  CHECK(normal_subgroups(*s4).size() == 4);
  const auto series = chief_series(*s4);
  std::vector<std::size_t> orders;
  for (const auto& n : series) orders.push_back(n.count());
  CHECK(orders == std::vector<std::size_t>{1, 4, 12, 24});
  for (const auto& spec : builtin_corpus()) {
    const auto g = build_group(spec);
    for (bool last : {false, true}) {
      const auto cs = chief_series(*g, last);
      CHECK(cs.front().count() == 1);
      CHECK(cs.back().count() == g->order());
      for (std::size_t i = 0; i < cs.size(); ++i) CHECK(is_normal(*g, cs[i]));
    }
  }
}
