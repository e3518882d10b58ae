#include "piw/vertex_weights.hpp"

#include <algorithm>
#include <set>

#include "piw/errors.hpp"
#include "piw/perm_group.hpp"

namespace piw {

void SuiteResult::fail(std::string message) {
  ++violations;
  if (messages.size() < 8) messages.push_back(std::move(message));
}

void SuiteResult::merge(const SuiteResult& other) {
  instances += other.instances;
  violations += other.violations;
  for (const auto& m : other.messages) {
    if (messages.size() < 8) messages.push_back(m);
  }
}

namespace {

std::vector<std::size_t> gens_of(const Workspace& ws, const ElementSet& s) { return ws.root()->generators_of(s); }

/// Orbits of a group (given by root generators) on I_pi(K), restricted to `subset`
/// (which must be a union of orbits). Each orbit is sorted; orbits are ordered by least member.
std::vector<std::vector<std::size_t>> orbits_on(const Workspace& ws, const PartialBasis& k_basis,
                                                const std::vector<std::size_t>& gens,
                                                const std::vector<std::size_t>& subset) {
  std::vector<std::vector<std::size_t>> actions;
  for (auto g : gens) actions.push_back(conjugation_action(k_basis, ws.root()->element(g)));
  std::vector<bool> seen(k_basis.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (auto s : subset) {
    if (seen[s]) continue;
    std::vector<std::size_t> orbit{s};
    seen[s] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& a : actions) {
        if (!seen[a[orbit[i]]]) {
          seen[a[orbit[i]]] = true;
          orbit.push_back(a[orbit[i]]);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

/// Members of I_pi(K) fixed by every generator.
std::vector<std::size_t> fixed_members(const Workspace& ws, const PartialBasis& k_basis,
                                       const std::vector<std::size_t>& gens) {
  std::vector<bool> fixed(k_basis.size(), true);
  for (auto g : gens) {
    const auto a = conjugation_action(k_basis, ws.root()->element(g));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != i) fixed[i] = false;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (fixed[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string order_label(const ElementSet& s) { return "|Q|=" + std::to_string(s.count()); }

/// Normal subgroups of the root (root coordinates) whose order is a sigma-number.
std::vector<ElementSet> normal_sigma_subgroups(Workspace& ws, const PiConfig& sigma) {
  const Node& g = ws.root_node();
  std::vector<ElementSet> out;
  for (const auto& n : g.normal_subgroups()) {
    if (sigma.is_number(n.count())) out.push_back(g.to_root(n));
  }
  return out;
}

/// Chief series members of the root, root coordinates, the trivial group first.
std::vector<ElementSet> chief_members(Workspace& ws) {
  const Node& g = ws.root_node();
  std::vector<ElementSet> out;
  for (const auto& n : g.chief_series()) out.push_back(g.to_root(n));
  return out;
}

ElementSet stabilizer_root(Workspace& ws, const Node& k, const PiConfig& pi, std::size_t theta) {
  const Node& g = ws.root_node();
  return g.to_root(partial_stabilizer(*g.group(), k.basis(pi), theta));
}

}  // namespace

std::vector<ElementSet> pi_prime_classes(const Node& h, const PiConfig& pi) {
  const PiConfig pi_prime = pi.complement();
  std::vector<ElementSet> out;
  for (const auto& c : h.subgroups()) {
    if (pi_prime.is_number(c.order)) out.push_back(h.to_root(c.elements));
  }
  return out;
}

std::vector<std::size_t> partial_chars_with_vertex(const Node& h, const PiConfig& pi, const ElementSet& q) {
  return h.with_vertex(pi, q);
}

std::vector<std::size_t> lying_over(const Node& h, const PiConfig& pi, const Node& k, std::size_t theta) {
  if (!is_normal(*h.group(), h.to_local(k.set()))) throw DomainError("lying_over: K is not normal in H");
  const PartialBasis& hb = h.basis(pi);
  const PartialBasis& kb = k.basis(pi);
  const auto fusion = k.fusion_into(h);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < hb.size(); ++i) {
    const auto mult = kb.decompose(restrict_partial(hb[i], kb.data(), fusion));
    if (mult[theta] > 0) out.push_back(i);
  }
  return out;
}

std::size_t partial_index_of_irr(const Node& k, const PiConfig& pi, std::size_t chi) {
  const PartialBasis& kb = k.basis(pi);
  const std::size_t i = kb.index_of(restrict_to_pi(k.table()[chi], k.pi_classes(pi)));
  if (i == kb.size()) throw DomainError("partial_index_of_irr: restriction is not irreducible");
  return i;
}

bool is_invariant(const Node& k, std::size_t chi, const std::vector<std::size_t>& gens) {
  const ClassFunction& c = k.table()[chi];
  const auto& root = k.workspace().root();
  for (auto g : gens) {
    if (!(conjugate_character(c, root->element(g)) == c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Weights and theorem rows

WeightsResult weights_with_first_component(Workspace& ws, const Node& g, const PiConfig& pi, const ElementSet& q) {
  WeightsResult r;
  r.q = q;
  r.normalizer = ws.normalizer_in(g, q);
  const Node& n = ws.node(r.normalizer);
  const QuotientView& view = ws.quotient(n, q);
  const CharacterTable& bar = view.workspace->root_node().table();
  const PartialBasis& nb = n.basis(pi);
  r.i_n_q = n.with_vertex(pi, q);
  std::vector<bool> hit(nb.size(), false);
  bool ok = true;
  for (std::size_t t = 0; t < bar.size(); ++t) {
    if (!has_pi_prime_defect_zero(bar[t], pi)) continue;
    const PartialCharacter image = restrict_to_pi(inflate(bar[t], *view.map), n.pi_classes(pi));
    const std::size_t idx = nb.index_of(image);
    if (idx == nb.size()) {
      ok = false;
      r.detail = "tau^0 is not irreducible for tau " + std::to_string(t);
      continue;
    }
    if (!std::binary_search(r.i_n_q.begin(), r.i_n_q.end(), idx)) {
      ok = false;
      r.detail = "tau^0 does not have vertex Q for tau " + std::to_string(t);
    }
    if (hit[idx]) {
      ok = false;
      r.detail = "two weights share tau^0";
    }
    hit[idx] = true;
    r.weights.push_back({q, t, idx});
  }
  if (r.weights.size() != r.i_n_q.size()) {
    ok = false;
    r.detail = "the map is not onto I(N_G(Q)|Q)";
  }
  r.bijective = ok;
  return r;
}

bool theorem_B_hypothesis(Workspace& ws, const Node& g, const PiConfig& pi, const ElementSet& q) {
  const ElementSet n = ws.normalizer_in(g, q);
  const PiConfig pi_prime = pi.complement();
  const SubgroupClassList& subs = g.subgroups();
  const std::size_t qn = q.count();
  for (std::size_t c = 0; c < subs.size(); ++c) {
    if (subs[c].order <= qn || !pi_prime.is_number(subs[c].order) || subs[c].order % qn != 0) continue;
    for (const auto& local : subs.conjugates(c)) {
      const ElementSet x = g.to_root(local);
      if (!q.is_subset_of(x)) continue;
      if ((x & n).count() <= qn) return false;
    }
  }
  return true;
}

std::vector<QRow> theorem_rows(Workspace& ws, const PiConfig& pi) {
  const Node& g = ws.root_node();
  std::vector<QRow> rows;
  for (const auto& q : pi_prime_classes(g, pi)) {
    QRow row;
    row.q = q;
    row.q_order = q.count();
    const WeightsResult w = weights_with_first_component(ws, g, pi, q);
    row.n_order = w.normalizer.count();
    row.i_g_q = g.with_vertex(pi, q).size();
    row.i_n_q = w.i_n_q.size();
    row.weights = w.weights.size();
    row.weights_bijective = w.bijective;
    row.thm_a_ok = row.i_g_q <= row.i_n_q;
    row.thm_b_hyp = theorem_B_hypothesis(ws, g, pi, q);
    row.thm_b_ok = !row.thm_b_hyp || row.i_g_q == row.i_n_q;
    rows.push_back(std::move(row));
  }
  return rows;
}

CorollaryCResult corollary_C_check(Workspace& ws, const PiConfig& pi) {
  const Node& g = ws.root_node();
  CorollaryCResult r;
  const ElementSet q = ws.hall(g, pi.complement());
  r.q_order = q.count();
  const ElementSet n_set = ws.normalizer_in(g, q);
  const Node& n = ws.node(n_set);
  r.i_g_q = g.with_vertex(pi, q).size();
  r.i_n_q = n.with_vertex(pi, q).size();
  r.irr_n_mod_q = ws.quotient(n, q).workspace->root_node().table().size();

  const CharacterTable& table = g.table();
  const SubnormalData& sub = g.subnormal();
  const PartialBasis& basis = g.basis(pi);
  std::set<std::size_t> images;
  bool injective = true;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!sub.is_pi_special(table[i], pi)) continue;
    ++r.x_pi;
    const std::size_t idx = basis.index_of(restrict_to_pi(table[i], g.pi_classes(pi)));
    if (idx == basis.size() || !images.insert(idx).second) injective = false;
  }
  std::set<std::size_t> pi_degree;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (pi.is_number(basis[i].degree())) pi_degree.insert(i);
  }
  r.restriction_bijective = injective && images == pi_degree;
  return r;
}

AwcResult awc_pi_check(Workspace& ws, const PiConfig& pi, const std::vector<QRow>& rows) {
  const Node& g = ws.root_node();
  AwcResult r;
  for (const auto& row : rows) r.weight_classes += row.weights;
  r.pi_classes = g.pi_classes(pi)->size();
  r.hall_nilpotent = is_nilpotent(ws.root()->to_group(ws.hall(g, pi.complement())));
  return r;
}

AwcResult awc_pi_check(Workspace& ws, const PiConfig& pi) { return awc_pi_check(ws, pi, theorem_rows(ws, pi)); }

// ---------------------------------------------------------------------------
// Relative version

std::vector<RelativeRow> relative_theorem_check(Workspace& ws, const PiConfig& pi, const ElementSet& z,
                                                std::size_t lambda) {
  const Node& g = ws.root_node();
  if (!pi.is_number(z.count())) throw DomainError("relative_theorem_check: Z is not a pi-subgroup");
  if (!is_normal(*g.group(), z)) throw DomainError("relative_theorem_check: Z is not normal");
  const Node& zn = ws.node(z);
  if (lambda >= zn.table().size()) throw DomainError("relative_theorem_check: no such character of Z");
  if (!is_invariant(zn, lambda, g.group()->generator_indices())) {
    throw DomainError("relative_theorem_check: lambda is not G-invariant");
  }
  const std::size_t lam = partial_index_of_irr(zn, pi, lambda);
  const auto over_g = lying_over(g, pi, zn, lam);

  std::vector<RelativeRow> rows;
  for (const auto& q : pi_prime_classes(g, pi)) {
    RelativeRow row;
    row.z_order = z.count();
    row.lambda = lambda;
    row.q_order = q.count();
    row.left = intersect(g.with_vertex(pi, q), over_g).size();
    const ElementSet n_set = ws.normalizer_in(g, ws.join(q, z));
    const Node& n = ws.node(n_set);
    row.n_order = n_set.count();
    row.right = intersect(n.with_vertex(pi, q), lying_over(n, pi, zn, lam)).size();
    row.hyp_b = theorem_B_hypothesis(ws, g, pi, q);
    row.ok_a = row.left <= row.right;
    row.ok_b = !row.hyp_b || row.left == row.right;
    rows.push_back(row);
  }
  return rows;
}

std::vector<RelativeRow> relative_suite(Workspace& ws, const PiConfig& pi) {
  const Node& g = ws.root_node();
  const auto gens = g.group()->generator_indices();
  std::vector<RelativeRow> out;
  for (const auto& z : normal_sigma_subgroups(ws, pi)) {
    const Node& zn = ws.node(z);
    for (std::size_t l = 0; l < zn.table().size(); ++l) {
      if (!is_invariant(zn, l, gens)) continue;
      auto rows = relative_theorem_check(ws, pi, z, l);
      out.insert(out.end(), rows.begin(), rows.end());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Invariant suites

SuiteResult vertex_suite(Workspace& ws, const PiConfig& pi) {
  SuiteResult r{"vertices"};
  const Node& g = ws.root_node();
  const PartialBasis& basis = g.basis(pi);
  const PiConfig pi_prime = pi.complement();
  const std::uint64_t g_pp = pi_prime.part(g.order());
  const auto& vertices = g.vertices(pi);
  for (const auto& v : vertices) {
    ++r.instances;
    const std::uint64_t d_pp = pi_prime.part(basis[v.phi].degree());
    if (d_pp * v.vertex.count() != g_pp) r.fail("vertex order formula fails for " + basis[v.phi].to_string());
    // re-verify the witness
    const Node& u = ws.node(v.witness_subgroup);
    const PartialCharacter& theta = u.basis(pi)[v.witness_theta];
    if (!pi.is_number(theta.degree())) r.fail("witness degree is not a pi-number");
    if (!(induce_partial(theta, g.pi_classes(pi), u.fusion_into(g)) == basis[v.phi])) {
      r.fail("witness does not induce " + basis[v.phi].to_string());
    }
    if (ws.hall(u, pi_prime).count() != v.vertex.count()) r.fail("vertex is not a Hall pi'-subgroup of the witness");
  }
  std::size_t total = 0;
  for (const auto& q : pi_prime_classes(g, pi)) total += g.with_vertex(pi, q).size();
  ++r.instances;
  if (total != basis.size()) r.fail("the sets I(G|Q) do not partition I_pi(G)");
  return r;
}

SuiteResult quotient_suite(Workspace& ws, const PiConfig& pi) {
  SuiteResult r{"quotient"};
  const Node& g = ws.root_node();
  const PartialBasis& basis = g.basis(pi);
  const auto& vertices = g.vertices(pi);
  for (const auto& n : normal_sigma_subgroups(ws, pi.complement())) {
    for (const auto& v : vertices) {
      ++r.instances;
      if (!n.is_subset_of(v.vertex)) r.fail("normal pi'-subgroup of order " + std::to_string(n.count()) + " not in a vertex");
    }
    if (n.count() == 1) continue;
    const QuotientView& view = ws.quotient(g, n);
    const Node& bar = view.workspace->root_node();
    const PartialBasis& bar_basis = bar.basis(pi);
    const auto& bar_vertices = bar.vertices(pi);
    ++r.instances;
    if (bar_basis.size() != basis.size()) {
      r.fail("|I(G)| differs from |I(G/N)|");
      continue;
    }
    std::vector<bool> hit(bar_basis.size(), false);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      ++r.instances;
      const PartialCharacter image = quotient_transfer(basis[i], *view.map, bar.pi_classes(pi));
      const std::size_t j = bar_basis.index_of(image);
      if (j == bar_basis.size() || hit[j]) {
        r.fail("transfer of " + basis[i].to_string() + " is not a new member of I(G/N)");
        continue;
      }
      hit[j] = true;
      if (image.degree() != basis[i].degree()) r.fail("transfer changes a degree");
      const std::size_t cls = bar.subgroup_class(view.image(vertices[i].vertex));
      if (cls != bar_vertices[j].vertex_class) r.fail("vertex image is not a vertex of the transfer");
    }
  }
  return r;
}

SuiteResult clifford_suite(Workspace& ws, const PiConfig& pi) {
  SuiteResult r{"clifford"};
  const Node& g = ws.root_node();
  const PartialBasis& basis = g.basis(pi);
  for (const auto& k_set : chief_members(ws)) {
    const Node& k = ws.node(k_set);
    const PartialBasis& kb = k.basis(pi);
    for (std::size_t theta = 0; theta < kb.size(); ++theta) {
      ++r.instances;
      const Node& t = ws.node(stabilizer_root(ws, k, pi, theta));
      const auto over_t = lying_over(t, pi, k, theta);
      const auto over_g = lying_over(g, pi, k, theta);
      const auto fusion = t.fusion_into(g);
      std::vector<std::size_t> images;
      for (auto a : over_t) {
        const std::size_t j = basis.index_of(induce_partial(t.basis(pi)[a], g.pi_classes(pi), fusion));
        if (j == basis.size()) {
          r.fail("induced Clifford correspondent is reducible");
          continue;
        }
        images.push_back(j);
        if (clifford_correspondent(basis[j], kb, theta, t.basis(pi)) != a) r.fail("Clifford correspondent mismatch");
      }
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) r.fail("induction is not injective");
      if (images != over_g) r.fail("induction does not reach I(G|theta)");
    }
  }
  return r;
}

SuiteResult orbit_suite(Workspace& ws, const PiConfig& pi) {
  SuiteResult r{"orbit"};
  const Node& g = ws.root_node();
  const PartialBasis& basis = g.basis(pi);
  for (const auto& k_local : g.normal_subgroups()) {
    const ElementSet k_set = g.to_root(k_local);
    const Node& k = ws.node(k_set);
    const PartialBasis& kb = k.basis(pi);
    const auto fusion = k.fusion_into(g);
    for (const auto& q : pi_prime_classes(g, pi)) {
      const auto n_gens = gens_of(ws, ws.normalizer_in(g, q));
      for (auto phi : g.with_vertex(pi, q)) {
        ++r.instances;
        const auto mult = kb.decompose(restrict_partial(basis[phi], kb.data(), fusion));
        std::vector<std::size_t> good;
        for (std::size_t theta = 0; theta < kb.size(); ++theta) {
          if (mult[theta] == 0) continue;
          const Node& t = ws.node(stabilizer_root(ws, k, pi, theta));
          const std::size_t a = clifford_correspondent(basis[phi], kb, theta, t.basis(pi));
          const auto with_q = t.with_vertex(pi, q);
          if (std::binary_search(with_q.begin(), with_q.end(), a)) good.push_back(theta);
        }
        const auto orbits = orbits_on(ws, kb, n_gens, good);
        if (orbits.size() != 1) {
          r.fail(order_label(q) + ", |K|=" + std::to_string(k_set.count()) + ": " + std::to_string(orbits.size()) +
                 " orbits of good constituents");
        }
      }
    }
  }
  return r;
}

SuiteResult sum_formula_suite(Workspace& ws, const PiConfig& pi) {
  SuiteResult r{"sum_formula"};
  const Node& g = ws.root_node();
  for (const auto& k_set : chief_members(ws)) {
    const Node& k = ws.node(k_set);
    const PartialBasis& kb = k.basis(pi);
    for (const auto& q : pi_prime_classes(g, pi)) {
      ++r.instances;
      const auto invariant = fixed_members(ws, kb, gens_of(ws, q));
      const auto orbits = orbits_on(ws, kb, gens_of(ws, ws.normalizer_in(g, q)), invariant);
      std::size_t sum = 0;
      for (const auto& orbit : orbits) {
        const std::size_t tau = orbit.front();
        const Node& t = ws.node(stabilizer_root(ws, k, pi, tau));
        sum += intersect(t.with_vertex(pi, q), lying_over(t, pi, k, tau)).size();
      }
      const std::size_t expected = g.with_vertex(pi, q).size();
      if (sum != expected) {
        r.fail(order_label(q) + ", |K|=" + std::to_string(k_set.count()) + ": sum " + std::to_string(sum) +
               " != " + std::to_string(expected));
      }
    }
  }
  return r;
}

SuiteResult normalizer_vertex_suite(Workspace& ws, const PiConfig& pi) {
  SuiteResult r{"normalizer_vertex"};
  const Node& g = ws.root_node();
  const FiniteGroup& root = *ws.root();
  const PartialBasis& basis = g.basis(pi);
  const auto& vertices = g.vertices(pi);
  const PiConfig pi_prime = pi.complement();
  for (const auto& k_set : normal_sigma_subgroups(ws, pi)) {
    const Node& k = ws.node(k_set);
    for (const auto& q : pi_prime_classes(g, pi)) {
      if (!is_normal(root, ws.join(k_set, q))) continue;
      const ElementSet n_set = ws.normalizer_in(g, q);
      const auto n_gens = gens_of(ws, n_set);
      const auto q_gens = gens_of(ws, q);
      for (std::size_t theta = 0; theta < k.table().size(); ++theta) {
        if (!is_invariant(k, theta, q_gens)) continue;
        for (auto phi : lying_over(g, pi, k, partial_index_of_irr(k, pi, theta))) {
          ++r.instances;
          // conjugates P of the vertex with Q <= P <= N_G(Q)
          const auto& subs = g.subgroups();
          std::vector<ElementSet> between;
          for (const auto& local : subs.conjugates(vertices[phi].vertex_class)) {
            const ElementSet p = g.to_root(local);
            if (q.is_subset_of(p) && p.is_subset_of(n_set)) between.push_back(p);
          }
          if (between.empty()) {
            r.fail(order_label(q) + ": no vertex between Q and N_G(Q)");
            continue;
          }
          const bool q_is_vertex = vertices[phi].vertex.count() == q.count();
          const bool formula = pi_prime.part(basis[phi].degree()) == pi_prime.part(g.order() / q.count());
          if (q_is_vertex != formula) r.fail(order_label(q) + ": vertex criterion by degree fails");
          // all such P are N_G(Q)-conjugate
          std::set<ElementSet> orbit{between.front()};
          std::vector<ElementSet> queue{between.front()};
          for (std::size_t i = 0; i < queue.size(); ++i) {
            for (auto x : n_gens) {
              ElementSet c = root.conjugate_set(queue[i], x);
              if (orbit.insert(c).second) queue.push_back(std::move(c));
            }
          }
          for (const auto& p : between) {
            if (!orbit.count(p)) {
              r.fail(order_label(q) + ": vertices between Q and N_G(Q) not N_G(Q)-conjugate");
              break;
            }
          }
        }
      }
    }
  }
  return r;
}

SuiteResult pi_prime_quotient_suite(Workspace& ws, const PiConfig& pi) {
  SuiteResult r{"pi_prime_quotient"};
  const Node& g = ws.root_node();
  const auto g_gens = g.group()->generator_indices();
  const auto ls = normal_sigma_subgroups(ws, pi.complement());
  for (const auto& k_set : normal_sigma_subgroups(ws, pi)) {
    const Node& k = ws.node(k_set);
    for (std::size_t theta = 0; theta < k.table().size(); ++theta) {
      if (!is_invariant(k, theta, g_gens)) continue;
      const auto over_g = lying_over(g, pi, k, partial_index_of_irr(k, pi, theta));
      for (const auto& l : ls) {
        if (l.count() == 1) continue;
        const QuotientView& view = ws.quotient(g, l);
        Workspace& qws = *view.workspace;
        const Node& bar = qws.root_node();
        const Node& kbar = qws.node(view.image(k_set));
        // theta-bar(kL) = theta(k)
        std::vector<Cyclotomic> values;
        const FiniteGroup& kb_group = *kbar.group();
        for (const auto& c : kb_group.classes()) {
          const std::size_t target = kbar.root_index(c.representative);
          std::size_t preimage = 0;
          for (auto x : k_set.indices()) {
            if (view.image_index(x) == target) {
              preimage = x;
              break;
            }
          }
          values.push_back(k.table()[theta][k.group()->class_of(k.local_index(preimage))]);
        }
        const ClassFunction theta_bar(kbar.group(), std::move(values));
        const std::size_t tb = kbar.basis(pi).index_of(restrict_to_pi(theta_bar, kbar.pi_classes(pi)));
        ++r.instances;
        if (tb == kbar.basis(pi).size()) {
          r.fail("theta-bar is not irreducible");
          continue;
        }
        const auto over_bar = lying_over(bar, pi, kbar, tb);
        for (const auto& q : pi_prime_classes(g, pi)) {
          if (!l.is_subset_of(q)) continue;
          ++r.instances;
          const std::size_t left = intersect(g.with_vertex(pi, q), over_g).size();
          const std::size_t right = intersect(bar.with_vertex(pi, view.image(q)), over_bar).size();
          if (left != right) {
            r.fail(order_label(q) + ", |L|=" + std::to_string(l.count()) + ": " + std::to_string(left) +
                   " != " + std::to_string(right));
          }
        }
      }
    }
  }
  return r;
}

}  // namespace piw
