#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "piw/element_set.hpp"
#include "piw/perm_group.hpp"

namespace piw {

struct ConjugacyClass {
  std::size_t representative = 0;  // element index, lexicographically least in the class
  std::uint64_t size = 0;
  std::uint64_t centralizer_order = 0;
  std::uint64_t element_order = 0;
};

/// Conjugacy classes of a FiniteGroup, ordered by (element order, representative).
/// Class 0 is the identity class.
class ConjugacyClassSet {
 public:
  std::size_t size() const { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t i) const { return classes_[i]; }
  auto begin() const { return classes_.begin(); }
  auto end() const { return classes_.end(); }

  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  const std::vector<std::size_t>& members(std::size_t cls) const { return members_[cls]; }
  /// Power map for a prime dividing the group order: class -> class of rep^p.
  const std::vector<std::size_t>& power_map(std::uint64_t prime) const { return power_maps_.at(prime); }
  const std::map<std::uint64_t, std::vector<std::size_t>>& power_maps() const { return power_maps_; }

 private:
  friend class FiniteGroup;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> members_;
  std::map<std::uint64_t, std::vector<std::size_t>> power_maps_;
};

/// A permutation group together with an explicit, indexed element list and
/// its conjugacy classes. Elements are indexed in ascending lexicographic
/// order of image sequences, so index 0 is the identity.
class FiniteGroup {
 public:
  struct Options {
    /// Largest order for which elements are listed; larger groups are refused.
    std::uint64_t max_order = 2000;
    /// Up to this order classes come from the full orbit partition; above it
    /// from seeded random sampling certified by centralizer orders.
    std::uint64_t deterministic_class_limit = 200;
    std::uint64_t seed = 1;
  };

  explicit FiniteGroup(PermutationGroup group) : FiniteGroup(std::move(group), Options{}) {}
  FiniteGroup(PermutationGroup group, const Options& options);

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  const PermutationGroup& perm() const { return perm_; }
  std::uint64_t order() const { return perm_.order(); }
  std::size_t degree() const { return perm_.degree(); }
  const Options& options() const { return options_; }

  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> find(const Permutation& g) const;
  /// Throws DomainError when g is not an element.
  std::size_t index(const Permutation& g) const;

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  /// g^-1 a g
  std::size_t conj(std::size_t a, std::size_t g) const { return mul(mul(inverse_[g], a), g); }
  std::size_t power(std::size_t a, std::int64_t k) const;
  std::uint64_t element_order(std::size_t a) const { return element_orders_[a]; }
  std::uint64_t exponent() const { return exponent_; }
  std::vector<std::size_t> generator_indices() const;

  const ConjugacyClassSet& classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return classes_.class_of(element); }
  std::optional<std::size_t> class_of(const Permutation& g) const;

  ElementSet full_set() const;
  ElementSet trivial_set() const;
  /// Element set of a subgroup given by generators; throws DomainError if not contained.
  ElementSet set_of(const PermutationGroup& h) const;
  ElementSet generated(const std::vector<std::size_t>& gens) const;
  ElementSet conjugate_set(const ElementSet& s, std::size_t g) const;
  bool normalizes(std::size_t g, const ElementSet& h, const std::vector<std::size_t>& h_gens) const;
  /// Deterministic generating set: greedily adds the least element not yet generated.
  std::vector<std::size_t> generators_of(const ElementSet& h) const;
  PermutationGroup to_group(const ElementSet& h) const;

 private:
  void build_classes();
  void build_classes_random();
  void finish_classes(std::vector<std::vector<std::size_t>> orbits);
  std::vector<std::size_t> conjugation_orbit(std::size_t x) const;

  PermutationGroup perm_;
  Options options_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint64_t> element_orders_;
  std::uint64_t exponent_ = 1;
  ConjugacyClassSet classes_;

  mutable std::once_flag table_once_;
  mutable std::vector<std::uint32_t> table_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_finite_group(PermutationGroup group, const FiniteGroup::Options& options = {});

/// Builds a permutation group from generators, validating degrees.
PermutationGroup make_group(std::size_t degree, std::vector<Permutation> generators);

}  // namespace piw
