#include "piw/pi_partial.hpp"

#include <algorithm>
#include <numeric>

#include "piw/errors.hpp"
#include "piw/numtheory.hpp"

namespace piw {

namespace {

Rational ratio(std::uint64_t num, std::uint64_t den) {
  Rational r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

}  // namespace

PiClassData::PiClassData(GroupPtr group, PiConfig pi) : group_(std::move(group)), pi_(std::move(pi)) {
  const auto& classes = group_->classes();
  position_.assign(classes.size(), classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (!pi_.is_number(classes[c].element_order)) continue;
    position_[c] = classes_.size();
    classes_.push_back(c);
  }
  for (auto& p : position_) {
    if (p == classes.size()) p = classes_.size();
  }
}

PiClassPtr make_pi_class_data(const GroupPtr& group, const PiConfig& pi) {
  return std::make_shared<const PiClassData>(group, pi);
}

// ---------------------------------------------------------------------------

PartialCharacter::PartialCharacter(PiClassPtr data, std::vector<Cyclotomic> values)
    : data_(std::move(data)), values_(std::move(values)) {
  if (!data_ || values_.size() != data_->size()) {
    throw DomainError("PartialCharacter: expected one value per pi-class");
  }
}

const Cyclotomic& PartialCharacter::at_class(std::size_t cls) const {
  const std::size_t pos = data_->position(cls);
  if (pos >= values_.size()) throw DomainError("PartialCharacter: class " + std::to_string(cls) + " is not a pi-class");
  return values_[pos];
}

std::uint64_t PartialCharacter::degree() const {
  auto d = values_.front().as_rational_integer();
  if (!d || *d <= 0) throw DomainError("partial character degree is not a positive integer");
  return d->get_ui();
}

PartialCharacter& PartialCharacter::operator+=(const PartialCharacter& other) {
  if (group().get() != other.group().get()) throw DomainError("partial characters of different groups");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  lifts_.clear();
  irreducible_ = false;
  return *this;
}

std::string PartialCharacter::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ", ";
    out += values_[i].to_string();
  }
  return out + "]";
}

bool operator==(const PartialCharacter& a, const PartialCharacter& b) {
  return a.group().get() == b.group().get() && a.values_ == b.values_;
}

PartialCharacter restrict_to_pi(const ClassFunction& chi, const PiClassPtr& data) {
  if (chi.group().get() != data->group().get()) throw DomainError("restrict_to_pi: pi-class data of another group");
  std::vector<Cyclotomic> values;
  values.reserve(data->size());
  for (auto c : data->classes()) values.push_back(chi[c]);
  return PartialCharacter(data, std::move(values));
}

PartialCharacter restrict_to_pi(const ClassFunction& chi, const PiConfig& pi) {
  return restrict_to_pi(chi, make_pi_class_data(chi.group(), pi));
}

// ---------------------------------------------------------------------------
// PartialBasis

PartialBasis::PartialBasis(const CharacterTable& table, PiClassPtr data)
    : data_(std::move(data)), conductor_(table.conductor()) {
  if (table.group().get() != data_->group().get()) throw DomainError("PartialBasis: table and pi-class data disagree");
  if (!is_pi_separable(*table.group(), data_->pi())) {
    throw DomainError("I_pi(G) refused: the group is not " + data_->pi().to_string() + "-separable");
  }
  std::vector<PartialCharacter> distinct;
  std::vector<std::vector<std::size_t>> lifts;
  std::vector<std::size_t> restriction_of(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    PartialCharacter psi = restrict_to_pi(table[i], data_);
    auto it = std::find(distinct.begin(), distinct.end(), psi);
    if (it == distinct.end()) {
      restriction_of[i] = distinct.size();
      distinct.push_back(std::move(psi));
      lifts.push_back({i});
    } else {
      restriction_of[i] = static_cast<std::size_t>(it - distinct.begin());
      lifts[restriction_of[i]].push_back(i);
    }
  }
  std::vector<std::size_t> order(distinct.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return distinct[a].degree() < distinct[b].degree(); });

  for (auto u : order) {
    const std::vector<Rational> v = flatten(distinct[u]);
    std::vector<Rational> residual;
    if (auto coords = solve(v, &residual)) {
      for (const auto& c : *coords) {
        if (c < 0 || c.get_den() != 1) {
          throw TheoryViolation("I_pi peel: restriction " + distinct[u].to_string() +
                                " decomposes with a coefficient " + c.get_str() + " that is not a nonnegative integer");
        }
      }
      continue;
    }
    // Accept as a new irreducible member.
    const std::size_t m = members_.size();
    std::size_t pc = 0;
    while (residual[pc] == 0) ++pc;
    const Rational scale = 1 / residual[pc];
    std::vector<Rational> row(residual.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (residual[k] != 0) row[k] = residual[k] * scale;
    }
    for (auto& t : transform_) t.push_back(0);
    std::vector<Rational> t_new(m + 1, 0);
    t_new[m] = scale;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& c = v[pivots_[i]];
      if (c == 0) continue;
      for (std::size_t k = 0; k <= m; ++k) {
        if (transform_[i][k] != 0) t_new[k] -= c * transform_[i][k] * scale;
      }
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational f = rows_[i][pc];
      if (f == 0) continue;
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k] != 0) rows_[i][k] -= f * row[k];
      }
      for (std::size_t k = 0; k <= m; ++k) {
        if (t_new[k] != 0) transform_[i][k] -= f * t_new[k];
      }
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pc);
    transform_.push_back(std::move(t_new));
    PartialCharacter member = distinct[u];
    member.set_provenance(lifts[u], true);
    members_.push_back(std::move(member));
  }

  for (std::size_t i = 0; i < table.size(); ++i) decomposition_.push_back(decompose(distinct[restriction_of[i]]));
}

std::vector<Rational> PartialBasis::flatten(const PartialCharacter& f) const {
  if (f.group().get() != group().get()) throw DomainError("PartialBasis: partial character of another group");
  const std::size_t width = euler_phi(conductor_);
  std::vector<Rational> out(f.size() * width);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto lifted = f[i].in_conductor(conductor_);
    if (!lifted) {
      throw DomainError("PartialBasis: value " + f[i].to_string() + " lies outside the table's cyclotomic field");
    }
    const auto& coeffs = lifted->coefficients();
    std::copy(coeffs.begin(), coeffs.end(), out.begin() + static_cast<std::ptrdiff_t>(i * width));
  }
  return out;
}

std::optional<std::vector<Rational>> PartialBasis::solve(std::vector<Rational> v,
                                                         std::vector<Rational>* residual) const {
  std::vector<Rational> coords(members_.size(), 0);
  const std::vector<Rational> original = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = original[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (rows_[i][k] != 0) v[k] -= c * rows_[i][k];
    }
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (transform_[i][k] != 0) coords[k] += c * transform_[i][k];
    }
  }
  const bool zero = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  if (residual) *residual = std::move(v);
  if (!zero) return std::nullopt;
  return coords;
}

std::optional<std::vector<Rational>> PartialBasis::coordinates(const PartialCharacter& f) const {
  return solve(flatten(f), nullptr);
}

std::vector<std::int64_t> PartialBasis::decompose(const PartialCharacter& f) const {
  auto coords = coordinates(f);
  if (!coords) throw TheoryViolation("partial character " + f.to_string() + " is outside the span of I_pi");
  std::vector<std::int64_t> out;
  out.reserve(coords->size());
  for (const auto& c : *coords) {
    if (c < 0 || c.get_den() != 1) {
      throw TheoryViolation("partial character " + f.to_string() + " has coefficient " + c.get_str() +
                            " over I_pi");
    }
    out.push_back(c.get_num().get_si());
  }
  return out;
}

std::size_t PartialBasis::index_of(const PartialCharacter& f) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] == f) return i;
  }
  return members_.size();
}

// ---------------------------------------------------------------------------
// Induction, restriction, conjugation

PartialCharacter induce_partial(const PartialCharacter& theta, const PiClassPtr& target,
                                const std::vector<std::size_t>& fusion) {
  const FiniteGroup& u = *theta.group();
  const FiniteGroup& g = *target->group();
  std::vector<Cyclotomic> values(target->size());
  const auto& u_classes = theta.data()->classes();
  for (std::size_t i = 0; i < u_classes.size(); ++i) {
    if (theta[i].is_zero()) continue;
    const std::size_t pos = target->position(fusion[u_classes[i]]);
    values[pos] += theta[i] * ratio(1, u.classes()[u_classes[i]].centralizer_order);
  }
  for (std::size_t j = 0; j < values.size(); ++j) {
    values[j] *= Rational(static_cast<unsigned long>(g.classes()[target->classes()[j]].centralizer_order));
  }
  return PartialCharacter(target, std::move(values));
}

PartialCharacter induce_partial(const PartialCharacter& theta, const PiClassPtr& target) {
  return induce_partial(theta, target, class_fusion(*theta.group(), *target->group()));
}

PartialCharacter restrict_partial(const PartialCharacter& phi, const PiClassPtr& target,
                                  const std::vector<std::size_t>& fusion) {
  std::vector<Cyclotomic> values;
  values.reserve(target->size());
  for (auto c : target->classes()) values.push_back(phi.at_class(fusion[c]));
  return PartialCharacter(target, std::move(values));
}

PartialCharacter restrict_partial(const PartialCharacter& phi, const PiClassPtr& target) {
  return restrict_partial(phi, target, class_fusion(*target->group(), *phi.group()));
}

namespace {

bool normalizes(const FiniteGroup& g, const FiniteGroup& k) {
  for (auto x : g.generator_indices()) {
    for (auto y : k.generator_indices()) {
      if (!k.find(k.element(y).conjugate(g.element(x)))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::pair<std::size_t, std::int64_t>> constituents_over_normal(const PartialCharacter& phi,
                                                                          const PartialBasis& k_basis) {
  const FiniteGroup& g = *phi.group();
  const FiniteGroup& k = *k_basis.group();
  if (!normalizes(g, k)) throw DomainError("constituents_over_normal: K is not normal");
  const auto mult = k_basis.decompose(restrict_partial(phi, k_basis.data(), class_fusion(k, g)));
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] != 0) out.emplace_back(i, mult[i]);
  }
  if (out.empty()) throw TheoryViolation("constituents_over_normal: empty restriction");
  return out;
}

PartialCharacter conjugate_partial(const PartialCharacter& theta, const Permutation& g) {
  const FiniteGroup& k = *theta.group();
  const Permutation g_inv = g.inverse();
  std::vector<Cyclotomic> values;
  values.reserve(theta.size());
  for (auto c : theta.data()->classes()) {
    auto cls = k.class_of(k.element(k.classes()[c].representative).conjugate(g_inv));
    if (!cls) throw DomainError("conjugate_partial: element does not normalize the group");
    values.push_back(theta.at_class(*cls));
  }
  return PartialCharacter(theta.data(), std::move(values));
}

ClassFunction conjugate_character(const ClassFunction& theta, const Permutation& g) {
  const FiniteGroup& k = *theta.group();
  const Permutation g_inv = g.inverse();
  std::vector<Cyclotomic> values;
  values.reserve(theta.size());
  for (const auto& c : k.classes()) {
    auto cls = k.class_of(k.element(c.representative).conjugate(g_inv));
    if (!cls) throw DomainError("conjugate_character: element does not normalize the group");
    values.push_back(theta[*cls]);
  }
  return ClassFunction(theta.group(), std::move(values));
}

std::vector<std::size_t> conjugation_action(const PartialBasis& k_basis, const Permutation& g) {
  std::vector<std::size_t> out;
  out.reserve(k_basis.size());
  for (const auto& theta : k_basis.members()) {
    const std::size_t j = k_basis.index_of(conjugate_partial(theta, g));
    if (j == k_basis.size()) throw TheoryViolation("conjugation does not permute I_pi(K)");
    out.push_back(j);
  }
  return out;
}

ElementSet partial_stabilizer(const FiniteGroup& g, const PartialBasis& k_basis, std::size_t theta) {
  ElementSet out(g.elements().size());
  const PartialCharacter& t = k_basis[theta];
  for (std::size_t x = 0; x < g.elements().size(); ++x) {
    if (out.test(x)) continue;
    if (conjugate_partial(t, g.element(x)) == t) {
      std::vector<std::size_t> gens = g.generators_of(out.count() ? out : g.trivial_set());
      gens.push_back(x);
      out = g.generated(gens);
    }
  }
  return out;
}

std::size_t clifford_correspondent(const PartialCharacter& phi, const PartialBasis& k_basis, std::size_t theta,
                                   const PartialBasis& stabilizer_basis) {
  const auto under = constituents_over_normal(phi, k_basis);
  if (std::none_of(under.begin(), under.end(), [&](const auto& c) { return c.first == theta; })) {
    throw DomainError("clifford_correspondent: theta does not lie under phi");
  }
  const FiniteGroup& t = *stabilizer_basis.group();
  const auto k_to_t = class_fusion(*k_basis.group(), t);
  const auto t_to_g = class_fusion(t, *phi.group());
  std::size_t found = stabilizer_basis.size();
  std::size_t count = 0;
  for (std::size_t a = 0; a < stabilizer_basis.size(); ++a) {
    const PartialCharacter& alpha = stabilizer_basis[a];
    const auto mult = k_basis.decompose(restrict_partial(alpha, k_basis.data(), k_to_t));
    if (mult[theta] == 0) continue;
    if (induce_partial(alpha, phi.data(), t_to_g) == phi) {
      found = a;
      ++count;
    }
  }
  if (count != 1) {
    throw TheoryViolation("clifford_correspondent: found " + std::to_string(count) + " correspondents instead of one");
  }
  return found;
}

PartialCharacter quotient_transfer(const PartialCharacter& phi, const QuotientGroup& quotient,
                                   const PiClassPtr& target) {
  if (quotient.source().get() != phi.group().get()) throw DomainError("quotient_transfer: quotient of another group");
  const PiConfig& pi = phi.pi();
  if (!pi.complement().is_number(quotient.kernel().count())) {
    throw DomainError("quotient_transfer: the kernel is not a pi'-group");
  }
  const FiniteGroup& g = *phi.group();
  const FiniteGroup& bar = *target->group();
  std::vector<Cyclotomic> values;
  values.reserve(target->size());
  for (auto c : target->classes()) {
    const std::size_t x = quotient.preimage(bar.element(bar.classes()[c].representative));
    values.push_back(phi.at_class(g.class_of(sigma_part(g, x, pi))));
  }
  return PartialCharacter(target, std::move(values));
}

ClassFunction inflate(const ClassFunction& tau, const QuotientGroup& quotient) {
  const FiniteGroup& bar = *tau.group();
  const FiniteGroup& g = *quotient.source();
  std::vector<Cyclotomic> values;
  values.reserve(g.classes().size());
  for (const auto& c : g.classes()) {
    auto cls = bar.class_of(quotient.image(c.representative));
    if (!cls) throw DomainError("inflate: character of a different quotient");
    values.push_back(tau[*cls]);
  }
  return ClassFunction(quotient.source(), std::move(values));
}

}  // namespace piw
