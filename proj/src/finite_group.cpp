#include "piw/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "piw/errors.hpp"
#include "piw/numtheory.hpp"

namespace piw {

namespace {
constexpr std::uint64_t kTableLimit = 1024;
}

FiniteGroup::FiniteGroup(PermutationGroup group, const Options& options)
    : perm_(std::move(group)), options_(options) {
  if (perm_.order() > options_.max_order) {
    throw ResourceError("group order " + std::to_string(perm_.order()) +
                        " exceeds the configured limit " + std::to_string(options_.max_order));
  }
  elements_ = perm_.elements();
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  inverse_.resize(elements_.size());
  element_orders_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    inverse_[i] = index_.at(elements_[i].inverse());
    element_orders_[i] = elements_[i].order();
    exponent_ = std::lcm(exponent_, element_orders_[i]);
  }
  if (order() <= options_.deterministic_class_limit) {
    build_classes();
  } else {
    build_classes_random();
  }
}

std::optional<std::size_t> FiniteGroup::find(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::index(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw DomainError("element " + g.to_string() + " is not in the group");
  return it->second;
}

std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const {
  const std::size_t n = elements_.size();
  if (n <= kTableLimit) {
    std::call_once(table_once_, [&] {
      table_.resize(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          table_[x * n + y] = static_cast<std::uint32_t>(index_.at(elements_[x] * elements_[y]));
        }
      }
    });
    return table_[a * n + b];
  }
  return index_.at(elements_[a] * elements_[b]);
}

std::size_t FiniteGroup::power(std::size_t a, std::int64_t k) const {
  std::uint64_t ord = element_orders_[a];
  std::int64_t e = k % static_cast<std::int64_t>(ord);
  if (e < 0) e += static_cast<std::int64_t>(ord);
  std::size_t result = 0;
  std::size_t base = a;
  auto u = static_cast<std::uint64_t>(e);
  while (u) {
    if (u & 1U) result = mul(result, base);
    base = mul(base, base);
    u >>= 1U;
  }
  return result;
}

std::vector<std::size_t> FiniteGroup::generator_indices() const {
  std::vector<std::size_t> out;
  for (const auto& g : perm_.generators()) out.push_back(index_.at(g));
  return out;
}

std::optional<std::size_t> FiniteGroup::class_of(const Permutation& g) const {
  auto idx = find(g);
  if (!idx) return std::nullopt;
  return classes_.class_of(*idx);
}

std::vector<std::size_t> FiniteGroup::conjugation_orbit(std::size_t x) const {
  const auto gens = generator_indices();
  std::vector<std::size_t> orbit{x};
  std::vector<bool> seen(elements_.size(), false);
  seen[x] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto g : gens) {
      std::size_t y = conj(orbit[i], g);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

void FiniteGroup::build_classes() {
  std::vector<bool> done(elements_.size(), false);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t x = 0; x < elements_.size(); ++x) {
    if (done[x]) continue;
    auto orbit = conjugation_orbit(x);
    for (auto y : orbit) done[y] = true;
    orbits.push_back(std::move(orbit));
  }
  finish_classes(std::move(orbits));
}

void FiniteGroup::build_classes_random() {
  std::mt19937_64 rng(options_.seed);
  std::vector<bool> done(elements_.size(), false);
  std::vector<std::vector<std::size_t>> orbits;
  std::uint64_t covered = 0;
  while (covered < order()) {
    std::size_t x = index_.at(perm_.random_element(rng));
    if (done[x]) continue;
    auto orbit = conjugation_orbit(x);
    // Certify the class size against an independently computed centralizer.
    std::uint64_t cent = centralizer(perm_, elements_[x]).order();
    if (cent * orbit.size() != order()) {
      throw TheoryViolation("class size " + std::to_string(orbit.size()) + " times centralizer order " +
                            std::to_string(cent) + " differs from the group order");
    }
    for (auto y : orbit) done[y] = true;
    covered += orbit.size();
    orbits.push_back(std::move(orbit));
  }
  finish_classes(std::move(orbits));
}

void FiniteGroup::finish_classes(std::vector<std::vector<std::size_t>> orbits) {
  std::sort(orbits.begin(), orbits.end(), [&](const auto& a, const auto& b) {
    if (element_orders_[a.front()] != element_orders_[b.front()]) {
      return element_orders_[a.front()] < element_orders_[b.front()];
    }
    return a.front() < b.front();
  });
  classes_.class_of_.assign(elements_.size(), 0);
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    ConjugacyClass cls;
    cls.representative = orbits[c].front();
    cls.size = orbits[c].size();
    cls.centralizer_order = order() / cls.size;
    cls.element_order = element_orders_[cls.representative];
    for (auto y : orbits[c]) classes_.class_of_[y] = c;
    classes_.classes_.push_back(cls);
  }
  classes_.members_ = std::move(orbits);
  for (auto p : prime_divisors(order())) {
    std::vector<std::size_t> map(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      map[c] = classes_.class_of_[power(classes_[c].representative, static_cast<std::int64_t>(p))];
    }
    classes_.power_maps_.emplace(p, std::move(map));
  }
}

ElementSet FiniteGroup::full_set() const {
  ElementSet s(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) s.set(i);
  return s;
}

ElementSet FiniteGroup::trivial_set() const {
  ElementSet s(elements_.size());
  s.set(0);
  return s;
}

ElementSet FiniteGroup::set_of(const PermutationGroup& h) const {
  ElementSet s(elements_.size());
  for (const auto& g : h.elements()) {
    auto idx = find(g);
    if (!idx) throw DomainError("subgroup element " + g.to_string() + " is not in the group");
    s.set(*idx);
  }
  return s;
}

ElementSet FiniteGroup::generated(const std::vector<std::size_t>& gens) const {
  ElementSet s(elements_.size());
  std::vector<std::size_t> members{0};
  s.set(0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto g : gens) {
      std::size_t y = mul(members[i], g);
      if (!s.test(y)) {
        s.set(y);
        members.push_back(y);
      }
    }
  }
  return s;
}

ElementSet FiniteGroup::conjugate_set(const ElementSet& s, std::size_t g) const {
  ElementSet r(elements_.size());
  for (auto x : s.indices()) r.set(conj(x, g));
  return r;
}

bool FiniteGroup::normalizes(std::size_t g, const ElementSet& h,
                             const std::vector<std::size_t>& h_gens) const {
  return std::all_of(h_gens.begin(), h_gens.end(),
                     [&](std::size_t x) { return h.test(conj(x, g)); });
}

std::vector<std::size_t> FiniteGroup::generators_of(const ElementSet& h) const {
  std::vector<std::size_t> gens;
  ElementSet current = trivial_set();
  for (auto x : h.indices()) {
    if (current.test(x)) continue;
    gens.push_back(x);
    current = generated(gens);
    if (current == h) break;
  }
  return gens;
}

PermutationGroup FiniteGroup::to_group(const ElementSet& h) const {
  std::vector<Permutation> gens;
  for (auto x : generators_of(h)) gens.push_back(elements_[x]);
  return PermutationGroup(degree(), std::move(gens));
}

GroupPtr make_finite_group(PermutationGroup group, const FiniteGroup::Options& options) {
  return std::make_shared<const FiniteGroup>(std::move(group), options);
}

PermutationGroup make_group(std::size_t degree, std::vector<Permutation> generators) {
  return PermutationGroup(degree, std::move(generators));
}

}  // namespace piw
