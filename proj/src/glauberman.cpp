#include "piw/glauberman.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "piw/errors.hpp"
#include "piw/numtheory.hpp"
#include "piw/perm_group.hpp"
#include "piw/vertex_weights.hpp"

namespace piw {

namespace {

std::size_t descend(Workspace& ws, const CoprimeAction& act, const std::vector<ElementSet>& series, std::size_t theta) {
  ElementSet cur = act.k;
  std::size_t idx = theta;
  for (std::size_t i = 1; i < series.size(); ++i) {
    ElementSet next = ws.centralizer_in(cur, series[i]);
    if (next == cur) continue;
    const std::uint64_t p = prime_divisors(series[i].count() / series[i - 1].count()).front();
    const Node& from = ws.node(cur);
    const Node& to = ws.node(next);
    const auto mult = to.table().decompose(restrict_to(from.table()[idx], to.group(), to.fusion_into(from)));
    std::size_t found = mult.size();
    std::size_t count = 0;
    for (std::size_t j = 0; j < mult.size(); ++j) {
      if (mult[j] % static_cast<std::int64_t>(p) != 0) {
        found = j;
        ++count;
      }
    }
    if (count != 1) {
      throw TheoryViolation("Glauberman step: " + std::to_string(count) + " constituents with multiplicity prime to " +
                            std::to_string(p));
    }
    cur = std::move(next);
    idx = found;
  }
  if (cur != act.c) throw TheoryViolation("Glauberman descent did not end at C_K(Q)");
  return idx;
}

std::vector<ElementSet> q_series(Workspace& ws, const CoprimeAction& act, bool prefer_last) {
  const Node& qn = ws.node(act.q);
  if (!is_solvable(qn.group()->perm())) {
    throw Unsupported("Glauberman correspondence for a nonsolvable acting group is not implemented");
  }
  std::vector<ElementSet> out;
  for (const auto& m : chief_series(*qn.group(), prefer_last)) out.push_back(qn.to_root(m));
  return out;
}

std::vector<std::size_t> invariant_characters(Workspace& ws, const CoprimeAction& act) {
  const Node& k = ws.node(act.k);
  const auto gens = ws.root()->generators_of(act.q);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < k.table().size(); ++i) {
    if (is_invariant(k, i, gens)) out.push_back(i);
  }
  return out;
}

}  // namespace

CoprimeAction make_coprime_action(Workspace& ws, const ElementSet& k, const ElementSet& q) {
  const FiniteGroup& root = *ws.root();
  if (std::gcd(k.count(), q.count()) != 1) throw DomainError("coprime action: |K| and |Q| are not coprime");
  for (auto g : root.generators_of(q)) {
    if (root.conjugate_set(k, g) != k) throw DomainError("coprime action: Q does not normalize K");
  }
  return CoprimeAction{k, q, ws.centralizer_in(k, q)};
}

GlaubermanMap glauberman_map(Workspace& ws, const CoprimeAction& act, bool prefer_last) {
  GlaubermanMap out;
  out.invariant = invariant_characters(ws, act);
  // Q centralizes K: the identity, whatever Q is
  if (act.c == act.k) {
    out.image = out.invariant;
    return out;
  }
  const auto series = q_series(ws, act, prefer_last);
  for (auto theta : out.invariant) out.image.push_back(descend(ws, act, series, theta));
  return out;
}

std::size_t glauberman_correspondent(Workspace& ws, const CoprimeAction& act, std::size_t theta, bool prefer_last) {
  const Node& k = ws.node(act.k);
  if (theta >= k.table().size()) throw DomainError("glauberman_correspondent: no such character");
  if (!is_invariant(k, theta, ws.root()->generators_of(act.q))) {
    throw DomainError("glauberman_correspondent: theta is not Q-invariant");
  }
  if (act.c == act.k) return theta;
  return descend(ws, act, q_series(ws, act, prefer_last), theta);
}

GlaubermanCheck check_glauberman(Workspace& ws, const CoprimeAction& act, std::uint64_t seed, int samples) {
  GlaubermanCheck r;
  const GlaubermanMap first = glauberman_map(ws, act, false);
  const GlaubermanMap second = glauberman_map(ws, act, true);
  const Node& k = ws.node(act.k);
  const Node& c = ws.node(act.c);
  r.invariant = first.invariant.size();
  r.c_characters = c.table().size();
  r.series_independent = first.image == second.image;
  if (!r.series_independent) r.detail = "the two chief series give different maps";

  std::vector<std::size_t> sorted = first.image;
  std::sort(sorted.begin(), sorted.end());
  r.bijective = r.invariant == r.c_characters && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!r.bijective) r.detail = "the map Irr_Q(K) -> Irr(C_K(Q)) is not a bijection";

  const auto q_primes = prime_divisors(act.q.count());
  if (q_primes.size() == 1) {
    const auto q = static_cast<std::int64_t>(q_primes.front());
    for (std::size_t i = 0; i < first.invariant.size(); ++i) {
      const auto d = static_cast<std::int64_t>(k.table().degree(first.invariant[i]));
      const auto ds = static_cast<std::int64_t>(c.table().degree(first.image[i]));
      if ((d - ds) % q != 0 && (d + ds) % q != 0) {
        r.degree_congruence = false;
        r.detail = "degree congruence fails";
      }
    }
  }

  const Node& root = ws.root_node();
  const ElementSet n = ws.normalizer_in(root, act.q) & ws.normalizer_in(root, act.k);
  const auto candidates = n.indices();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  r.natural = true;
  for (int s = 0; s < samples && r.natural; ++s) {
    const Permutation& g = ws.root()->element(candidates[pick(rng)]);
    for (std::size_t i = 0; i < first.invariant.size(); ++i) {
      const std::size_t moved = k.table().index_of(conjugate_character(k.table()[first.invariant[i]], g));
      const auto pos = std::find(first.invariant.begin(), first.invariant.end(), moved);
      const std::size_t star = c.table().index_of(conjugate_character(c.table()[first.image[i]], g));
      if (pos == first.invariant.end() || first.image[pos - first.invariant.begin()] != star) {
        r.natural = false;
        r.detail = "the map does not commute with N_G(Q) and N_G(K)";
        break;
      }
    }
  }
  return r;
}

BasicRow basic_theorem_check(Workspace& ws, const PiConfig& pi, const ElementSet& k, const ElementSet& q,
                             std::size_t tau) {
  const FiniteGroup& root = *ws.root();
  if (!pi.is_number(k.count())) throw DomainError("basic theorem: K is not a pi-subgroup");
  if (!is_normal(root, k)) throw DomainError("basic theorem: K is not normal");
  if (!pi.complement().is_number(q.count())) throw DomainError("basic theorem: Q is not a pi'-subgroup");
  if (!is_normal(root, ws.join(k, q))) throw DomainError("basic theorem: KQ is not normal");
  const CoprimeAction act = make_coprime_action(ws, k, q);
  BasicRow row;
  row.k_order = k.count();
  row.q_order = q.count();
  row.tau = tau;
  row.tau_star = glauberman_correspondent(ws, act, tau);

  const Node& g = ws.root_node();
  const Node& kn = ws.node(k);
  const auto over_g = lying_over(g, pi, kn, partial_index_of_irr(kn, pi, tau));
  const auto with_q = g.with_vertex(pi, q);
  std::vector<std::size_t> left;
  std::set_intersection(with_q.begin(), with_q.end(), over_g.begin(), over_g.end(), std::back_inserter(left));
  row.left = left.size();

  const Node& n = ws.node(ws.normalizer_in(g, q));
  const Node& cn = ws.node(act.c);
  const auto over_n = lying_over(n, pi, cn, partial_index_of_irr(cn, pi, row.tau_star));
  const auto n_with_q = n.with_vertex(pi, q);
  std::vector<std::size_t> right;
  std::set_intersection(n_with_q.begin(), n_with_q.end(), over_n.begin(), over_n.end(), std::back_inserter(right));
  row.right = right.size();
  return row;
}

std::vector<std::pair<ElementSet, ElementSet>> coprime_instances(Workspace& ws, const PiConfig& pi) {
  const Node& g = ws.root_node();
  std::vector<std::pair<ElementSet, ElementSet>> out;
  for (const auto& local : g.normal_subgroups()) {
    if (!pi.is_number(local.count())) continue;
    const ElementSet k = g.to_root(local);
    for (const auto& q : pi_prime_classes(g, pi)) {
      if (is_normal(*ws.root(), ws.join(k, q))) out.emplace_back(k, q);
    }
  }
  return out;
}

}  // namespace piw
