#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "piw/char_table.hpp"
#include "piw/element_set.hpp"
#include "piw/pi_config.hpp"
#include "piw/pi_structure.hpp"

namespace piw {

/// The conjugacy classes of pi-elements of a group.
class PiClassData {
 public:
  PiClassData(GroupPtr group, PiConfig pi);

  const GroupPtr& group() const { return group_; }
  const PiConfig& pi() const { return pi_; }
  /// Class indices of the pi-classes, ascending; the identity class comes first.
  const std::vector<std::size_t>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  /// Position of a class among the pi-classes, or size() for a pi'-singular class.
  std::size_t position(std::size_t cls) const { return position_[cls]; }

 private:
  GroupPtr group_;
  PiConfig pi_;
  std::vector<std::size_t> classes_;
  std::vector<std::size_t> position_;
};

using PiClassPtr = std::shared_ptr<const PiClassData>;

PiClassPtr make_pi_class_data(const GroupPtr& group, const PiConfig& pi);

/// A class function on the pi-elements, one value per pi-class.
class PartialCharacter {
 public:
  PartialCharacter() = default;
  PartialCharacter(PiClassPtr data, std::vector<Cyclotomic> values);

  const PiClassPtr& data() const { return data_; }
  const GroupPtr& group() const { return data_->group(); }
  const PiConfig& pi() const { return data_->pi(); }
  std::size_t size() const { return values_.size(); }
  const std::vector<Cyclotomic>& values() const { return values_; }
  /// Value at the i-th pi-class.
  const Cyclotomic& operator[](std::size_t i) const { return values_[i]; }
  /// Value at a class of the group; throws DomainError for a pi'-singular class.
  const Cyclotomic& at_class(std::size_t cls) const;
  /// Throws DomainError unless the value at 1 is a positive integer.
  std::uint64_t degree() const;

  /// Indices into the ordinary table of the characters restricting to this one.
  const std::vector<std::size_t>& lifts() const { return lifts_; }
  bool irreducible() const { return irreducible_; }
  void set_provenance(std::vector<std::size_t> lifts, bool irreducible) {
    lifts_ = std::move(lifts);
    irreducible_ = irreducible;
  }

  PartialCharacter& operator+=(const PartialCharacter& other);
  friend PartialCharacter operator+(PartialCharacter a, const PartialCharacter& b) { return a += b; }
  std::string to_string() const;

  /// Equality of value vectors on the same group; provenance is ignored.
  friend bool operator==(const PartialCharacter& a, const PartialCharacter& b);

 private:
  PiClassPtr data_;
  std::vector<Cyclotomic> values_;
  std::vector<std::size_t> lifts_;
  bool irreducible_ = false;
};

/// chi^0. `data` must describe chi's group.
PartialCharacter restrict_to_pi(const ClassFunction& chi, const PiClassPtr& data);
PartialCharacter restrict_to_pi(const ClassFunction& chi, const PiConfig& pi);

/// I_pi(G): the irreducible pi-partial characters, found by peeling the distinct
/// restrictions chi^0 in order of degree. A restriction is kept exactly when it
/// is not in the rational span of those kept before; otherwise its coordinates
/// must be nonnegative integers.
class PartialBasis {
 public:
  /// Throws DomainError if the group is not pi-separable and TheoryViolation if
  /// a restriction decomposes with coefficients that are not nonnegative integers.
  PartialBasis(const CharacterTable& table, PiClassPtr data);

  const PiClassPtr& data() const { return data_; }
  const GroupPtr& group() const { return data_->group(); }
  std::size_t size() const { return members_.size(); }
  const PartialCharacter& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<PartialCharacter>& members() const { return members_; }
  /// Rows indexed by Irr(G) in table order, columns by members.
  const std::vector<std::vector<std::int64_t>>& decomposition_matrix() const { return decomposition_; }

  /// Coordinates over the members, or nullopt if f lies outside their span.
  std::optional<std::vector<Rational>> coordinates(const PartialCharacter& f) const;
  /// Multiplicities of the members in f. Throws TheoryViolation unless they are
  /// nonnegative integers.
  std::vector<std::int64_t> decompose(const PartialCharacter& f) const;
  /// Index of the member equal to f, or size() if none.
  std::size_t index_of(const PartialCharacter& f) const;

 private:
  std::vector<Rational> flatten(const PartialCharacter& f) const;
  /// Reduces v against the echelon rows; returns coordinates if the residual vanishes.
  std::optional<std::vector<Rational>> solve(std::vector<Rational> v, std::vector<Rational>* residual) const;

  PiClassPtr data_;
  std::uint64_t conductor_ = 1;
  std::vector<PartialCharacter> members_;
  std::vector<std::vector<std::int64_t>> decomposition_;
  // Echelon rows with a 1 at their own pivot and 0 at the other pivots, and
  // for each row its expression in terms of the members.
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Rational>> transform_;
};

/// theta^G on pi-elements: |C_G(g)| sum over U-classes c fusing to g of theta(c)/|C_U(c)|.
/// `fusion` maps classes of U to classes of G.
PartialCharacter induce_partial(const PartialCharacter& theta, const PiClassPtr& target,
                                const std::vector<std::size_t>& fusion);
PartialCharacter induce_partial(const PartialCharacter& theta, const PiClassPtr& target);

/// phi restricted to a subgroup H (given by its pi-class data).
PartialCharacter restrict_partial(const PartialCharacter& phi, const PiClassPtr& target,
                                  const std::vector<std::size_t>& fusion);
PartialCharacter restrict_partial(const PartialCharacter& phi, const PiClassPtr& target);

/// phi_K decomposed over I_pi(K) for K normal in phi's group: nonzero (index, multiplicity) pairs.
/// Throws DomainError unless K is normal and TheoryViolation on a non-integral decomposition.
std::vector<std::pair<std::size_t, std::int64_t>> constituents_over_normal(const PartialCharacter& phi,
                                                                          const PartialBasis& k_basis);

/// theta^g, defined by theta^g(x^g) = theta(x), for g normalizing theta's group.
PartialCharacter conjugate_partial(const PartialCharacter& theta, const Permutation& g);
ClassFunction conjugate_character(const ClassFunction& theta, const Permutation& g);

/// The permutation of I_pi(K) induced by g (which must normalize K).
std::vector<std::size_t> conjugation_action(const PartialBasis& k_basis, const Permutation& g);

/// Elements of G (as a set of G's indices) fixing member `theta` of I_pi(K) under conjugation.
ElementSet partial_stabilizer(const FiniteGroup& g, const PartialBasis& k_basis, std::size_t theta);

/// The unique alpha in I_pi(G_theta) lying over theta with alpha^G = phi.
/// `stabilizer_basis` is I_pi(G_theta). Throws DomainError if theta is not under phi and
/// TheoryViolation if the correspondent is not unique.
std::size_t clifford_correspondent(const PartialCharacter& phi, const PartialBasis& k_basis, std::size_t theta,
                                   const PartialBasis& stabilizer_basis);

/// phi-bar on G/N with phi-bar(xN) = phi(x) for pi-elements x. N must be a normal pi'-subgroup.
PartialCharacter quotient_transfer(const PartialCharacter& phi, const QuotientGroup& quotient,
                                   const PiClassPtr& target);

/// Ordinary character of the quotient pulled back to the source group
/// (given as a FiniteGroup equal to quotient.source()).
ClassFunction inflate(const ClassFunction& tau, const QuotientGroup& quotient);

}  // namespace piw
