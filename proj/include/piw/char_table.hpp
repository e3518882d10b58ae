#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "piw/cyclotomic.hpp"
#include "piw/element_set.hpp"
#include "piw/finite_group.hpp"
#include "piw/pi_config.hpp"

namespace piw {

/// A class function: one cyclotomic value per conjugacy class of its group.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);

  static ClassFunction trivial(const GroupPtr& group);
  /// |G| at the identity, 0 elsewhere.
  static ClassFunction regular(const GroupPtr& group);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& operator[](std::size_t cls) const { return values_[cls]; }
  const Cyclotomic& degree_value() const { return values_.front(); }
  /// The value at 1 as an integer. Throws DomainError unless it is a positive integer.
  std::uint64_t degree() const;

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  /// Pointwise product.
  ClassFunction& operator*=(const ClassFunction& other);
  ClassFunction& operator*=(const Rational& r);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& r) { return a *= r; }

  ClassFunction conj() const;
  /// Every value expressed in conductor e (a multiple of each current conductor).
  ClassFunction lifted(std::uint64_t e) const;
  std::string to_string() const;

  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  void check_same_group(const ClassFunction& other) const;

  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

/// The irreducible characters of a finite group, computed by Dixon-Schneider.
/// Ordering: trivial character first, then degree ascending, then values
/// lexicographically.
class CharacterTable {
 public:
  const GroupPtr& group() const { return group_; }
  /// All values are expressed in Q(zeta_e) for this e.
  std::uint64_t conductor() const { return conductor_; }
  /// The prime used for the eigenspace computation.
  std::uint64_t prime() const { return prime_; }
  std::size_t size() const { return chars_.size(); }
  const ClassFunction& operator[](std::size_t i) const { return chars_[i]; }
  const std::vector<ClassFunction>& irreducibles() const { return chars_; }
  std::uint64_t degree(std::size_t i) const { return degrees_[i]; }
  std::uint64_t determinant_order(std::size_t i) const { return det_orders_[i]; }
  std::size_t inverse_class(std::size_t cls) const { return inverse_class_[cls]; }

  /// <f, chi_i> for every i. Throws DomainError if some product is not a rational integer.
  std::vector<std::int64_t> decompose(const ClassFunction& f) const;
  /// Index of an irreducible equal to f, or size() if none.
  std::size_t index_of(const ClassFunction& f) const;

  /// JSON with class data and E(e)-notation values.
  std::string to_json(int indent = 2) const;

 private:
  friend CharacterTable character_table(const GroupPtr& g, std::uint64_t conductor);

  GroupPtr group_;
  std::uint64_t conductor_ = 1;
  std::uint64_t prime_ = 0;
  std::vector<ClassFunction> chars_;
  std::vector<std::uint64_t> degrees_;
  std::vector<std::uint64_t> det_orders_;
  std::vector<std::size_t> inverse_class_;
};

/// Throws ResourceError if no suitable prime among the first few candidates works.
/// A conductor of 0 means the exponent of the group; otherwise it must be a multiple of it.
CharacterTable character_table(const GroupPtr& g, std::uint64_t conductor = 0);

/// (1/|G|) sum over classes of |class| f(x) conj(g(x)). Throws DomainError on
/// group mismatch or a non-rational result.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// For each class of H, the class of G containing it. Throws DomainError unless H <= G.
std::vector<std::size_t> class_fusion(const FiniteGroup& h, const FiniteGroup& g);

ClassFunction restrict_to(const ClassFunction& chi, const GroupPtr& h);
ClassFunction restrict_to(const ClassFunction& chi, const GroupPtr& h, const std::vector<std::size_t>& fusion);
ClassFunction induce(const ClassFunction& theta, const GroupPtr& g);
ClassFunction induce(const ClassFunction& theta, const GroupPtr& g, const std::vector<std::size_t>& fusion);

/// Multiplicities a_0..a_{m-1} of the eigenvalues zeta_m^k of a representation
/// affording chi at a representative of the class (m its element order).
/// Throws DomainError if chi is not a character on that cyclic subgroup.
std::vector<std::uint64_t> eigenvalue_multiplicities(const ClassFunction& chi, std::size_t cls);
/// det(chi) as a linear character.
ClassFunction determinant(const ClassFunction& chi);
std::uint64_t determinant_order(const ClassFunction& chi);

/// chi(1)_{pi'} = |G|_{pi'}.
bool has_pi_prime_defect_zero(const ClassFunction& chi, const PiConfig& pi);

/// All subnormal subgroups of G (G included), sorted by order then set.
std::vector<ElementSet> subnormal_subgroups(const FiniteGroup& g);

/// Subnormal subgroups of a fixed group with their tables, reused across
/// pi-special tests.
class SubnormalData {
 public:
  explicit SubnormalData(GroupPtr g, std::uint64_t conductor = 0);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return entries_.size(); }
  const ElementSet& subgroup(std::size_t i) const { return entries_[i].set; }

  /// chi(1) is a pi-number and every irreducible constituent of chi_S, for every
  /// subnormal S, has pi-number determinantal order.
  bool is_pi_special(const ClassFunction& chi, const PiConfig& pi) const;

 private:
  struct Entry {
    ElementSet set;
    GroupPtr group;
    std::shared_ptr<const CharacterTable> table;
    std::vector<std::size_t> fusion;
  };
  GroupPtr group_;
  std::vector<Entry> entries_;
};

bool is_pi_special(const ClassFunction& chi, const PiConfig& pi);

}  // namespace piw
