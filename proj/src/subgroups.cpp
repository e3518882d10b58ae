#include "piw/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "piw/errors.hpp"
#include "piw/numtheory.hpp"

namespace piw {

std::vector<ElementSet> conjugates_of(const FiniteGroup& g, const ElementSet& h) {
  const auto gens = g.generator_indices();
  std::vector<ElementSet> orbit{h};
  std::unordered_set<ElementSet, ElementSetHash> seen{h};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto x : gens) {
      ElementSet c = g.conjugate_set(orbit[i], x);
      if (seen.insert(c).second) orbit.push_back(std::move(c));
    }
  }
  return orbit;
}

std::uint64_t normalizer_order(const FiniteGroup& g, const ElementSet& h) {
  return g.order() / conjugates_of(g, h).size();
}

std::optional<std::size_t> SubgroupClassList::class_of(const ElementSet& subgroup) const {
  auto it = lookup_.find(subgroup);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

PermutationGroup SubgroupClassList::representative(std::size_t cls) const {
  return parent_->to_group(classes_[cls].elements);
}

std::uint64_t SubgroupClassList::total_subgroups() const {
  std::uint64_t total = 0;
  for (const auto& c : classes_) total += parent_->order() / c.normalizer_order;
  return total;
}

std::size_t SubgroupClassList::add(const ElementSet& subgroup) {
  if (auto found = class_of(subgroup)) return *found;
  auto conj = conjugates_of(*parent_, subgroup);
  std::sort(conj.begin(), conj.end());
  SubgroupClass cls;
  cls.elements = conj.front();
  cls.generators = parent_->generators_of(cls.elements);
  cls.order = cls.elements.count();
  cls.normalizer_order = parent_->order() / conj.size();
  const std::size_t id = classes_.size();
  for (const auto& c : conj) lookup_.emplace(c, id);
  classes_.push_back(std::move(cls));
  conjugates_.push_back(std::move(conj));
  return id;
}

void SubgroupClassList::finalize() {
  std::vector<std::size_t> perm(classes_.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (classes_[a].order != classes_[b].order) return classes_[a].order < classes_[b].order;
    return classes_[a].elements < classes_[b].elements;
  });
  std::vector<SubgroupClass> classes;
  std::vector<std::vector<ElementSet>> conjugates;
  lookup_.clear();
  for (std::size_t i = 0; i < perm.size(); ++i) {
    classes.push_back(std::move(classes_[perm[i]]));
    conjugates.push_back(std::move(conjugates_[perm[i]]));
    for (const auto& c : conjugates.back()) lookup_.emplace(c, i);
  }
  classes_ = std::move(classes);
  conjugates_ = std::move(conjugates);
}

SubgroupClassList SubgroupClassList::filtered(
    const std::function<bool(const SubgroupClass&)>& keep) const {
  SubgroupClassList out(parent_);
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (!keep(classes_[i])) continue;
    const std::size_t id = out.classes_.size();
    out.classes_.push_back(classes_[i]);
    out.conjugates_.push_back(conjugates_[i]);
    for (const auto& c : conjugates_[i]) out.lookup_.emplace(c, id);
  }
  return out;
}

namespace {

void enumerate_cyclic_extension(const FiniteGroup& g, SubgroupClassList& list) {
  const std::size_t n = g.elements().size();
  for (std::size_t i = 0; i < list.size(); ++i) {
    const ElementSet u = list[i].elements;
    const std::vector<std::size_t> u_gens = list[i].generators;
    ElementSet covered = u;
    for (std::size_t x = 0; x < n; ++x) {
      if (covered.test(x) || !g.normalizes(x, u, u_gens)) continue;
      std::size_t k = 1;
      for (std::size_t y = x; !u.test(y); y = g.mul(y, x)) ++k;
      if (!is_prime(k)) continue;
      std::vector<std::size_t> gens = u_gens;
      gens.push_back(x);
      ElementSet h = g.generated(gens);
      covered = covered | h;
      list.add(h);
    }
  }
}

void enumerate_join_closure(const FiniteGroup& g, SubgroupClassList& list) {
  const std::size_t n = g.elements().size();
  std::vector<ElementSet> cyclic;
  std::vector<std::size_t> cyclic_gen;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (std::size_t x = 1; x < n; ++x) {
    ElementSet c = g.generated({x});
    if (seen.insert(c).second) {
      cyclic.push_back(c);
      cyclic_gen.push_back(x);
    }
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    const ElementSet u = list[i].elements;
    const std::vector<std::size_t> u_gens = list[i].generators;
    for (std::size_t c = 0; c < cyclic.size(); ++c) {
      if (cyclic[c].is_subset_of(u)) continue;
      std::vector<std::size_t> gens = u_gens;
      gens.push_back(cyclic_gen[c]);
      list.add(g.generated(gens));
    }
  }
}

}  // namespace

SubgroupClassList subgroups_up_to_conjugacy(const GroupPtr& g, std::uint64_t limit) {
  if (g->order() > limit) {
    throw ResourceError("subgroup enumeration refused: group order " + std::to_string(g->order()) +
                        " exceeds the limit " + std::to_string(limit));
  }
  SubgroupClassList list(g);
  list.add(g->trivial_set());
  if (is_solvable(g->perm())) {
    enumerate_cyclic_extension(*g, list);
  } else {
    enumerate_join_closure(*g, list);
  }
  list.finalize();
  return list;
}

SubgroupClassList pi_prime_subgroups(const GroupPtr& g, const PiConfig& pi, std::uint64_t limit) {
  const PiConfig pi_prime = pi.complement();
  return subgroups_up_to_conjugacy(g, limit).filtered(
      [&](const SubgroupClass& c) { return pi_prime.is_number(c.order); });
}

ElementSet normal_closure(const FiniteGroup& g, const std::vector<std::size_t>& elements) {
  std::vector<std::size_t> gens;
  for (auto x : elements) {
    const auto& members = g.classes().members(g.class_of(x));
    gens.insert(gens.end(), members.begin(), members.end());
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return g.generated(gens);
}

bool is_normal(const FiniteGroup& g, const ElementSet& h) {
  const auto h_gens = g.generators_of(h);
  for (auto x : g.generator_indices()) {
    if (!g.normalizes(x, h, h_gens)) return false;
  }
  return true;
}

std::vector<ElementSet> normal_subgroups(const FiniteGroup& g) {
  std::vector<ElementSet> closures;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (const auto& cls : g.classes()) {
    ElementSet c = normal_closure(g, {cls.representative});
    if (seen.insert(c).second) closures.push_back(std::move(c));
  }
  // Every normal subgroup is a product of normal closures of classes.
  std::vector<ElementSet> all = closures;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : closures) {
      if (c.is_subset_of(all[i])) continue;
      std::vector<std::size_t> gens = g.generators_of(all[i]);
      auto more = g.generators_of(c);
      gens.insert(gens.end(), more.begin(), more.end());
      ElementSet joined = g.generated(gens);
      if (seen.insert(joined).second) all.push_back(std::move(joined));
    }
  }
  std::sort(all.begin(), all.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return all;
}

std::vector<ElementSet> chief_series(const FiniteGroup& g, bool prefer_last) {
  const auto normals = normal_subgroups(g);
  std::vector<ElementSet> series{g.trivial_set()};
  while (series.back().count() < g.order()) {
    const ElementSet& current = series.back();
    std::vector<const ElementSet*> minimal;
    std::size_t best = 0;
    for (const auto& n : normals) {
      if (n.count() <= current.count() || !current.is_subset_of(n)) continue;
      if (best == 0 || n.count() < best) {
        best = n.count();
        minimal.clear();
      }
      if (n.count() == best) minimal.push_back(&n);
    }
    // Among covers of least order every one is minimal over `current`.
    series.push_back(prefer_last ? *minimal.back() : *minimal.front());
  }
  return series;
}

}  // namespace piw
