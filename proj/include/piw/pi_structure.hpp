#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "piw/finite_group.hpp"
#include "piw/pi_config.hpp"

namespace piw {

/// O_sigma(G): the largest normal sigma-subgroup (pass pi.complement() for O_pi').
ElementSet o_pi_core_set(const FiniteGroup& g, const PiConfig& sigma);
PermutationGroup o_pi_core(const FiniteGroup& g, const PiConfig& sigma);

/// Preimage in G of O_sigma(G/N), for N normal in G.
ElementSet relative_core(const FiniteGroup& g, const ElementSet& n, const PiConfig& sigma);

/// True iff the ascending series of alternating pi'- and pi-cores reaches G.
bool is_pi_separable(const FiniteGroup& g, const PiConfig& pi);

/// A Hall sigma-subgroup, found by seeded randomized greedy growth of a
/// sigma-subgroup. Throws DomainError if the growth stalls below |G|_sigma.
ElementSet hall_subgroup_set(const FiniteGroup& g, const PiConfig& sigma, std::uint64_t seed = 1);
PermutationGroup hall_subgroup(const FiniteGroup& g, const PiConfig& sigma, std::uint64_t seed = 1);

/// G/N acting on the right cosets of N, together with the natural map.
class QuotientGroup {
 public:
  QuotientGroup(GroupPtr source, const ElementSet& kernel);

  const PermutationGroup& group() const { return group_; }
  const GroupPtr& source() const { return source_; }
  const ElementSet& kernel() const { return kernel_; }
  std::size_t index() const { return coset_rep_.size(); }
  /// Coset (point of the quotient action) containing a source element.
  std::size_t coset_of(std::size_t element) const { return coset_of_[element]; }
  std::size_t coset_representative(std::size_t coset) const { return coset_rep_[coset]; }
  /// Image of a source element under the natural map.
  Permutation image(std::size_t element) const;
  /// A source element mapping to the given quotient element (the representative of its coset).
  std::size_t preimage(const Permutation& image) const { return coset_rep_[image(0)]; }
  PermutationGroup image_of(const ElementSet& subgroup) const;

 private:
  GroupPtr source_;
  ElementSet kernel_;
  std::vector<std::size_t> coset_of_;
  std::vector<std::size_t> coset_rep_;
  PermutationGroup group_ = PermutationGroup::trivial(1);
};

/// Throws DomainError unless N is normal in G.
QuotientGroup quotient_group(const GroupPtr& g, const ElementSet& n);

/// The sigma-part of an element: the power of x whose order is the sigma-part of o(x).
std::size_t sigma_part(const FiniteGroup& g, std::size_t x, const PiConfig& sigma);

}  // namespace piw
