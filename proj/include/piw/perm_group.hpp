#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "piw/permutation.hpp"

namespace piw {

/// A permutation group with a deterministic Schreier-Sims base and strong
/// generating set. Immutable after construction.
class PermutationGroup {
 public:
  /// Throws InputError when a generator has the wrong degree.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   const std::vector<Point>& base_prefix = {});

  static PermutationGroup trivial(std::size_t degree) { return PermutationGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::uint64_t order() const { return order_; }
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;
  /// Lengths of the fundamental orbits; their product is the order.
  std::vector<std::size_t> orbit_lengths() const;

  bool contains(const Permutation& g) const;
  bool is_subgroup_of(const PermutationGroup& other) const;
  bool normalizes(const PermutationGroup& h) const;
  bool is_normal_in(const PermutationGroup& g) const { return g.normalizes(*this) && is_subgroup_of(g); }

  /// All elements in ascending lexicographic order of image sequences.
  std::vector<Permutation> elements() const;
  Permutation random_element(std::mt19937_64& rng) const;

  /// Enumerates every element of the stabilizer of the first `level` base points.
  void for_each_in_stabilizer(std::size_t level,
                              const std::function<bool(const Permutation&)>& visit) const;

  std::size_t levels() const { return levels_.size(); }
  Point base_point(std::size_t level) const { return levels_[level].base; }
  const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
  /// Coset representative u with base_point(level)^u = point, if point is in the orbit.
  std::optional<Permutation> transversal(std::size_t level, Point point) const;
  /// Strong generators fixing the first `level` base points.
  const std::vector<Permutation>& stabilizer_generators(std::size_t level) const {
    return levels_[level].gens;
  }

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // point -> index into reps, or -1
    std::vector<Permutation> reps;
  };

  void schreier_sims(const std::vector<Point>& base_prefix);
  void rebuild_orbit(Level& level) const;
  /// Returns the residue and the level at which sifting stopped (levels_.size() if complete).
  std::pair<Permutation, std::size_t> sift(const Permutation& g, std::size_t from) const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// Backtrack search over the stabilizer chain of `g` for the subgroup of
/// elements satisfying `property`. The property must define a subgroup.
/// `known` elements are assumed to satisfy it and seed the result.
PermutationGroup subgroup_search(const PermutationGroup& g,
                                 const std::function<bool(const Permutation&)>& property,
                                 const std::vector<Permutation>& known = {});

/// N_G(H). Throws DomainError unless H <= G.
PermutationGroup normalizer(const PermutationGroup& g, const PermutationGroup& h);
/// C_G(x). Throws DomainError unless x in G.
PermutationGroup centralizer(const PermutationGroup& g, const Permutation& x);
/// C_G(H). Throws DomainError unless H <= G.
PermutationGroup centralizer_of_subgroup(const PermutationGroup& g, const PermutationGroup& h);

/// Smallest normal subgroup of `g` containing `gens`.
PermutationGroup normal_closure(const PermutationGroup& g, const std::vector<Permutation>& gens);
/// [A, B] as the normal closure in <A, B> of commutators of generators.
PermutationGroup commutator_subgroup(const PermutationGroup& a, const PermutationGroup& b);
PermutationGroup derived_subgroup(const PermutationGroup& g);
bool is_solvable(const PermutationGroup& g);
bool is_nilpotent(const PermutationGroup& g);

}  // namespace piw
