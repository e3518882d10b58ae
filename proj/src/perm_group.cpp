#include "piw/perm_group.hpp"

#include <algorithm>

#include "piw/errors.hpp"

namespace piw {

namespace {

std::optional<Point> first_moved_point(const Permutation& g) {
  for (std::size_t x = 0; x < g.degree(); ++x) {
    if (g(static_cast<Point>(x)) != x) return static_cast<Point>(x);
  }
  return std::nullopt;
}

}  // namespace

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   const std::vector<Point>& base_prefix)
    : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw InputError("generator " + g.to_string() + " has degree " + std::to_string(g.degree()) +
                       ", expected " + std::to_string(degree));
    }
    if (g.is_identity()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) == generators_.end()) {
      generators_.push_back(std::move(g));
    }
  }
  for (Point b : base_prefix) {
    if (b >= degree) throw InputError("base point out of range");
  }
  schreier_sims(base_prefix);
}

void PermutationGroup::rebuild_orbit(Level& level) const {
  level.slot.assign(degree_, -1);
  level.orbit.clear();
  level.reps.clear();
  level.orbit.push_back(level.base);
  level.slot[level.base] = 0;
  level.reps.emplace_back(degree_);
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point gamma = level.orbit[i];
    for (const auto& s : level.gens) {
      Point delta = s(gamma);
      if (level.slot[delta] >= 0) continue;
      level.slot[delta] = static_cast<std::int32_t>(level.reps.size());
      level.reps.push_back(level.reps[static_cast<std::size_t>(level.slot[gamma])] * s);
      level.orbit.push_back(delta);
    }
  }
}

std::pair<Permutation, std::size_t> PermutationGroup::sift(const Permutation& g,
                                                           std::size_t from) const {
  Permutation h = g;
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const Level& level = levels_[j];
    Point beta = h(level.base);
    if (level.slot[beta] < 0) return {h, j};
    h *= level.reps[static_cast<std::size_t>(level.slot[beta])].inverse();
  }
  return {h, levels_.size()};
}

void PermutationGroup::schreier_sims(const std::vector<Point>& base_prefix) {
  levels_.clear();
  for (Point b : base_prefix) {
    Level level;
    level.base = b;
    levels_.push_back(std::move(level));
  }
  auto fixes_base = [&](const Permutation& g, std::size_t upto) {
    for (std::size_t j = 0; j < upto; ++j) {
      if (g(levels_[j].base) != levels_[j].base) return false;
    }
    return true;
  };
  for (const auto& g : generators_) {
    if (fixes_base(g, levels_.size())) {
      Level level;
      level.base = *first_moved_point(g);
      levels_.push_back(std::move(level));
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : generators_) {
      if (fixes_base(g, i)) levels_[i].gens.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  std::int64_t i = static_cast<std::int64_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    auto li = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !restarted; ++k) {
      Point beta = levels_[li].orbit[k];
      for (std::size_t s = 0; s < levels_[li].gens.size(); ++s) {
        const Level& level = levels_[li];
        const Permutation& gen = level.gens[s];
        Point image = gen(beta);
        Permutation schreier = level.reps[k] * gen *
                               level.reps[static_cast<std::size_t>(level.slot[image])].inverse();
        if (schreier.is_identity()) continue;
        auto [residue, stop] = sift(schreier, li + 1);
        if (stop == levels_.size() && residue.is_identity()) continue;
        if (stop == levels_.size()) {
          Level fresh;
          fresh.base = *first_moved_point(residue);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = li + 1; l <= stop; ++l) {
          levels_[l].gens.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::int64_t>(stop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }

  order_ = 1;
  for (const auto& level : levels_) order_ *= level.orbit.size();
}

std::vector<Point> PermutationGroup::base() const {
  std::vector<Point> b;
  for (const auto& level : levels_) b.push_back(level.base);
  return b;
}

std::vector<Permutation> PermutationGroup::strong_generators() const {
  std::vector<Permutation> s;
  for (const auto& level : levels_) {
    for (const auto& g : level.gens) {
      if (std::find(s.begin(), s.end(), g) == s.end()) s.push_back(g);
    }
  }
  return s;
}

std::vector<std::size_t> PermutationGroup::orbit_lengths() const {
  std::vector<std::size_t> lens;
  for (const auto& level : levels_) lens.push_back(level.orbit.size());
  return lens;
}

bool PermutationGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = sift(g, 0);
  return stop == levels_.size() && residue.is_identity();
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  if (other.degree_ != degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermutationGroup::normalizes(const PermutationGroup& h) const {
  for (const auto& g : generators_) {
    for (const auto& x : h.generators()) {
      if (!h.contains(x.conjugate(g))) return false;
    }
  }
  return true;
}

std::optional<Permutation> PermutationGroup::transversal(std::size_t level, Point point) const {
  const Level& l = levels_.at(level);
  if (point >= degree_ || l.slot[point] < 0) return std::nullopt;
  return l.reps[static_cast<std::size_t>(l.slot[point])];
}

void PermutationGroup::for_each_in_stabilizer(
    std::size_t level, const std::function<bool(const Permutation&)>& visit) const {
  // Elements of G^(i) are h * u with h in G^(i+1) and u a level-i coset representative.
  std::function<bool(std::size_t, const Permutation&)> walk = [&](std::size_t i,
                                                                  const Permutation& prefix) {
    for (const auto& u : levels_[i].reps) {
      Permutation next = prefix * u;
      if (i == level) {
        if (!visit(next)) return false;
      } else if (!walk(i - 1, next)) {
        return false;
      }
    }
    return true;
  };
  if (level >= levels_.size()) {
    visit(Permutation(degree_));
    return;
  }
  walk(levels_.size() - 1, Permutation(degree_));
}

std::vector<Permutation> PermutationGroup::elements() const {
  std::vector<Permutation> out;
  out.reserve(order_);
  for_each_in_stabilizer(0, [&](const Permutation& g) {
    out.push_back(g);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

Permutation PermutationGroup::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (const auto& level : levels_) {
    std::uniform_int_distribution<std::size_t> pick(0, level.reps.size() - 1);
    g = level.reps[pick(rng)] * g;
  }
  return g;
}

PermutationGroup subgroup_search(const PermutationGroup& g,
                                 const std::function<bool(const Permutation&)>& property,
                                 const std::vector<Permutation>& known) {
  const std::vector<Point> base = g.base();
  const std::size_t degree = g.degree();
  std::vector<Permutation> found = known;
  PermutationGroup result(degree, found, base);

  for (std::size_t i = g.levels(); i-- > 0;) {
    // Invariant: every element of G^(i+1) with the property lies in `result`.
    std::vector<Permutation> lower;
    g.for_each_in_stabilizer(i + 1, [&](const Permutation& h) {
      lower.push_back(h);
      return true;
    });
    std::vector<bool> failed(degree, false);
    std::vector<Point> orbit_points = g.orbit(i);
    std::sort(orbit_points.begin(), orbit_points.end());
    for (Point gamma : orbit_points) {
      if (gamma == base[i] || failed[gamma]) continue;
      const auto& covered = result.orbit(i);
      if (std::find(covered.begin(), covered.end(), gamma) != covered.end()) continue;
      Permutation u = *g.transversal(i, gamma);
      std::optional<Permutation> hit;
      for (const auto& h : lower) {
        Permutation candidate = h * u;
        if (property(candidate)) {
          hit = std::move(candidate);
          break;
        }
      }
      if (hit) {
        found.push_back(*hit);
        result = PermutationGroup(degree, found, base);
        continue;
      }
      // The whole orbit of gamma under the current stabilizer in `result` fails too.
      std::vector<Point> queue{gamma};
      failed[gamma] = true;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (const auto& s : result.stabilizer_generators(i)) {
          Point next = s(queue[q]);
          if (!failed[next]) {
            failed[next] = true;
            queue.push_back(next);
          }
        }
      }
    }
  }
  return result;
}

PermutationGroup normalizer(const PermutationGroup& g, const PermutationGroup& h) {
  if (!h.is_subgroup_of(g)) throw DomainError("normalizer: H is not a subgroup of G");
  return subgroup_search(
      g,
      [&](const Permutation& x) {
        for (const auto& y : h.generators()) {
          if (!h.contains(y.conjugate(x))) return false;
        }
        return true;
      },
      h.generators());
}

PermutationGroup centralizer(const PermutationGroup& g, const Permutation& x) {
  if (!g.contains(x)) throw DomainError("centralizer: element " + x.to_string() + " is not in G");
  return subgroup_search(
      g, [&](const Permutation& y) { return x.conjugate(y) == x; }, {x});
}

PermutationGroup centralizer_of_subgroup(const PermutationGroup& g, const PermutationGroup& h) {
  if (!h.is_subgroup_of(g)) throw DomainError("centralizer: H is not a subgroup of G");
  return subgroup_search(g, [&](const Permutation& y) {
    for (const auto& x : h.generators()) {
      if (x.conjugate(y) != x) return false;
    }
    return true;
  });
}

PermutationGroup normal_closure(const PermutationGroup& g, const std::vector<Permutation>& gens) {
  std::vector<Permutation> current = gens;
  PermutationGroup h(g.degree(), current);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Permutation> snapshot = h.generators();
    for (const auto& x : snapshot) {
      for (const auto& y : g.generators()) {
        Permutation c = x.conjugate(y);
        if (!h.contains(c)) {
          current.push_back(c);
          h = PermutationGroup(g.degree(), current);
          changed = true;
        }
      }
    }
  }
  return h;
}

PermutationGroup commutator_subgroup(const PermutationGroup& a, const PermutationGroup& b) {
  std::vector<Permutation> comms;
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) comms.push_back(commutator(x, y));
  }
  std::vector<Permutation> joint = a.generators();
  joint.insert(joint.end(), b.generators().begin(), b.generators().end());
  return normal_closure(PermutationGroup(a.degree(), joint), comms);
}

PermutationGroup derived_subgroup(const PermutationGroup& g) { return commutator_subgroup(g, g); }

bool is_solvable(const PermutationGroup& g) {
  PermutationGroup current = g;
  while (current.order() > 1) {
    PermutationGroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

bool is_nilpotent(const PermutationGroup& g) {
  PermutationGroup current = g;
  while (current.order() > 1) {
    PermutationGroup next = commutator_subgroup(current, g);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

}  // namespace piw
