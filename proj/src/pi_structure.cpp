#include "piw/pi_structure.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "piw/errors.hpp"
#include "piw/numtheory.hpp"
#include "piw/subgroups.hpp"

namespace piw {

ElementSet relative_core(const FiniteGroup& g, const ElementSet& n, const PiConfig& sigma) {
  const std::uint64_t n_order = n.count();
  std::vector<std::size_t> gens = g.generators_of(n);
  for (const auto& cls : g.classes()) {
    if (n.test(cls.representative)) continue;
    std::vector<std::size_t> trial = g.generators_of(n);
    const auto& members = g.classes().members(g.class_of(cls.representative));
    trial.insert(trial.end(), members.begin(), members.end());
    ElementSet m = g.generated(trial);
    if (sigma.is_number(m.count() / n_order)) {
      gens.insert(gens.end(), members.begin(), members.end());
    }
  }
  return g.generated(gens);
}

ElementSet o_pi_core_set(const FiniteGroup& g, const PiConfig& sigma) {
  return relative_core(g, g.trivial_set(), sigma);
}

PermutationGroup o_pi_core(const FiniteGroup& g, const PiConfig& sigma) {
  return g.to_group(o_pi_core_set(g, sigma));
}

bool is_pi_separable(const FiniteGroup& g, const PiConfig& pi) {
  const PiConfig pi_prime = pi.complement();
  ElementSet current = g.trivial_set();
  while (current.count() < g.order()) {
    ElementSet next = relative_core(g, relative_core(g, current, pi_prime), pi);
    if (next.count() == current.count()) return false;
    current = std::move(next);
  }
  return true;
}

ElementSet hall_subgroup_set(const FiniteGroup& g, const PiConfig& sigma, std::uint64_t seed) {
  const std::uint64_t target = sigma.part(g.order());
  std::vector<std::size_t> candidates;
  for (std::size_t x = 1; x < g.elements().size(); ++x) {
    if (sigma.is_number(g.element_order(x))) candidates.push_back(x);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  ElementSet h = g.trivial_set();
  std::vector<std::size_t> gens;
  // A candidate rejected once stays rejected: the growing subgroup only enlarges <H, x>.
  for (auto x : candidates) {
    if (h.count() == target) break;
    if (h.test(x)) continue;
    gens.push_back(x);
    ElementSet trial = g.generated(gens);
    if (sigma.is_number(trial.count())) {
      h = std::move(trial);
    } else {
      gens.pop_back();
    }
  }
  if (h.count() != target) {
    throw DomainError("no Hall " + sigma.to_string() + "-subgroup found: greedy growth stalled at order " +
                      std::to_string(h.count()) + " below " + std::to_string(target));
  }
  return h;
}

PermutationGroup hall_subgroup(const FiniteGroup& g, const PiConfig& sigma, std::uint64_t seed) {
  return g.to_group(hall_subgroup_set(g, sigma, seed));
}

QuotientGroup::QuotientGroup(GroupPtr source, const ElementSet& kernel)
    : source_(std::move(source)), kernel_(kernel) {
  const FiniteGroup& g = *source_;
  const auto members = kernel_.indices();
  constexpr auto unset = static_cast<std::size_t>(-1);
  coset_of_.assign(g.elements().size(), unset);
  for (std::size_t x = 0; x < g.elements().size(); ++x) {
    if (coset_of_[x] != unset) continue;
    const std::size_t id = coset_rep_.size();
    coset_rep_.push_back(x);
    for (auto k : members) coset_of_[g.mul(k, x)] = id;
  }
  std::vector<Permutation> gens;
  for (auto x : g.generator_indices()) gens.push_back(image(x));
  group_ = PermutationGroup(std::max<std::size_t>(coset_rep_.size(), 1), std::move(gens));
}

Permutation QuotientGroup::image(std::size_t element) const {
  const std::size_t n = coset_rep_.size();
  std::vector<Point> images(std::max<std::size_t>(n, 1), 0);
  for (std::size_t c = 0; c < n; ++c) {
    images[c] = static_cast<Point>(coset_of_[source_->mul(coset_rep_[c], element)]);
  }
  return Permutation(std::move(images));
}

PermutationGroup QuotientGroup::image_of(const ElementSet& subgroup) const {
  std::vector<Permutation> gens;
  for (auto x : source_->generators_of(subgroup)) gens.push_back(image(x));
  return PermutationGroup(group_.degree(), std::move(gens));
}

QuotientGroup quotient_group(const GroupPtr& g, const ElementSet& n) {
  if (!is_normal(*g, n)) throw DomainError("quotient_group: subgroup is not normal");
  return QuotientGroup(g, n);
}

std::size_t sigma_part(const FiniteGroup& g, std::size_t x, const PiConfig& sigma) {
  const std::uint64_t m = g.element_order(x);
  const std::uint64_t a = sigma.part(m);
  const std::uint64_t b = m / a;
  if (a == 1) return 0;
  if (b == 1) return x;
  const std::uint64_t u = b * invmod(b % a, a);
  return g.power(x, static_cast<std::int64_t>(u % m));
}

}  // namespace piw
