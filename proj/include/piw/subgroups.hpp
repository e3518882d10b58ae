#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "piw/finite_group.hpp"
#include "piw/pi_config.hpp"

namespace piw {

struct SubgroupClass {
  ElementSet elements;  // least conjugate under ElementSet ordering
  std::vector<std::size_t> generators;
  std::uint64_t order = 0;
  std::uint64_t normalizer_order = 0;
};

/// Conjugacy classes of subgroups of a fixed parent, ordered by
/// (order, representative). Every conjugate is registered for lookup.
class SubgroupClassList {
 public:
  SubgroupClassList() = default;
  explicit SubgroupClassList(GroupPtr parent) : parent_(std::move(parent)) {}

  const FiniteGroup& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  std::size_t size() const { return classes_.size(); }
  const SubgroupClass& operator[](std::size_t i) const { return classes_[i]; }
  auto begin() const { return classes_.begin(); }
  auto end() const { return classes_.end(); }

  /// Index of the class containing the given subgroup, if listed.
  std::optional<std::size_t> class_of(const ElementSet& subgroup) const;
  const std::vector<ElementSet>& conjugates(std::size_t cls) const { return conjugates_[cls]; }
  PermutationGroup representative(std::size_t cls) const;
  /// Sum over classes of the number of conjugates.
  std::uint64_t total_subgroups() const;
  SubgroupClassList filtered(const std::function<bool(const SubgroupClass&)>& keep) const;

  /// Registers the class of `subgroup` if new; returns its index.
  std::size_t add(const ElementSet& subgroup);
  /// Sorts classes into canonical order.
  void finalize();

 private:
  GroupPtr parent_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::vector<ElementSet>> conjugates_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
};

/// All conjugacy classes of subgroups. Cyclic extension for solvable groups,
/// join closure of cyclic subgroups otherwise. Throws ResourceError above `limit`.
SubgroupClassList subgroups_up_to_conjugacy(const GroupPtr& g, std::uint64_t limit = 2000);
/// Classes of subgroups whose order is a pi'-number; always contains the trivial class.
SubgroupClassList pi_prime_subgroups(const GroupPtr& g, const PiConfig& pi, std::uint64_t limit = 2000);

/// Conjugates of a subgroup under the whole group, as element sets.
std::vector<ElementSet> conjugates_of(const FiniteGroup& g, const ElementSet& h);
std::uint64_t normalizer_order(const FiniteGroup& g, const ElementSet& h);

/// Smallest normal subgroup containing the given elements.
ElementSet normal_closure(const FiniteGroup& g, const std::vector<std::size_t>& elements);
/// All normal subgroups, sorted by order then representative.
std::vector<ElementSet> normal_subgroups(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const ElementSet& h);
/// A chief series 1 = N_0 < N_1 < ... < N_k = G of normal subgroups.
/// With `prefer_last` the last minimal candidate is chosen at each step instead of the first.
std::vector<ElementSet> chief_series(const FiniteGroup& g, bool prefer_last = false);

}  // namespace piw
