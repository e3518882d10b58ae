#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "piw/workspace.hpp"

namespace piw {

/// Outcome of a family of invariant checks.
struct SuiteResult {
  explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::vector<std::string> messages;  // first few violations

  bool ok() const { return violations == 0; }
  void fail(std::string message);
  void merge(const SuiteResult& other);
};

/// Representatives (root coordinates) of the H-classes of pi'-subgroups of H, ascending order.
std::vector<ElementSet> pi_prime_classes(const Node& h, const PiConfig& pi);

/// I(H|Q) as indices into I_pi(H).
std::vector<std::size_t> partial_chars_with_vertex(const Node& h, const PiConfig& pi, const ElementSet& q);

/// Members of I_pi(H) lying over member `theta` of I_pi(K), for K normal in H.
std::vector<std::size_t> lying_over(const Node& h, const PiConfig& pi, const Node& k, std::size_t theta);

/// Index in I_pi(K) of the restriction of an ordinary character of K (table index).
std::size_t partial_index_of_irr(const Node& k, const PiConfig& pi, std::size_t chi);

/// True iff every element of `gens` (root indices) fixes Irr(K) member `chi` by conjugation.
bool is_invariant(const Node& k, std::size_t chi, const std::vector<std::size_t>& gens);

/// A pi'-weight (Q, tau) with its image under tau -> tau^0.
struct WeightRecord {
  ElementSet q;
  std::size_t tau = 0;    // index in the table of N_G(Q)/Q
  std::size_t image = 0;  // index in I_pi(N_G(Q))
};

struct WeightsResult {
  ElementSet q;
  ElementSet normalizer;
  std::vector<WeightRecord> weights;
  std::vector<std::size_t> i_n_q;  // I(N_G(Q)|Q)
  bool bijective = false;
  std::string detail;
};

/// Weights with first component Q and the map tau -> tau^0 into I(N_G(Q)|Q).
WeightsResult weights_with_first_component(Workspace& ws, const Node& g, const PiConfig& pi, const ElementSet& q);

/// Q < N_X(Q) for every pi'-subgroup X of G properly containing Q.
bool theorem_B_hypothesis(Workspace& ws, const Node& g, const PiConfig& pi, const ElementSet& q);

/// One row per pi'-subgroup class Q of the root.
struct QRow {
  ElementSet q;
  std::uint64_t q_order = 0;
  std::uint64_t n_order = 0;
  std::size_t i_g_q = 0;
  std::size_t i_n_q = 0;
  std::size_t weights = 0;
  bool weights_bijective = false;
  bool thm_a_ok = false;
  bool thm_b_hyp = false;
  bool thm_b_ok = false;  // true when the hypothesis fails
};

std::vector<QRow> theorem_rows(Workspace& ws, const PiConfig& pi);

struct CorollaryCResult {
  std::uint64_t q_order = 0;
  std::size_t i_g_q = 0;
  std::size_t i_n_q = 0;
  std::size_t x_pi = 0;
  std::size_t irr_n_mod_q = 0;
  bool restriction_bijective = false;  // X_pi(G) onto the pi-degree members of I_pi(G)
  bool ok() const { return i_g_q == i_n_q && x_pi == irr_n_mod_q && restriction_bijective; }
};

CorollaryCResult corollary_C_check(Workspace& ws, const PiConfig& pi);

struct AwcResult {
  std::size_t weight_classes = 0;
  std::size_t pi_classes = 0;
  bool hall_nilpotent = false;
  bool ok() const { return !hall_nilpotent || weight_classes == pi_classes; }
};

/// Counts weight classes from the rows of theorem_rows.
AwcResult awc_pi_check(Workspace& ws, const PiConfig& pi, const std::vector<QRow>& rows);
AwcResult awc_pi_check(Workspace& ws, const PiConfig& pi);

struct RelativeRow {
  std::uint64_t z_order = 0;
  std::size_t lambda = 0;  // index in the table of Z
  std::uint64_t q_order = 0;
  std::uint64_t n_order = 0;  // |N_G(QZ)|
  std::size_t left = 0;
  std::size_t right = 0;
  bool hyp_b = false;
  bool ok_a = false;
  bool ok_b = false;
};

/// Rows for every pi'-class Q; "lying over lambda" means lambda^0 is a constituent of phi_Z.
/// Throws DomainError unless Z is a normal pi-subgroup and lambda is G-invariant.
std::vector<RelativeRow> relative_theorem_check(Workspace& ws, const PiConfig& pi, const ElementSet& z,
                                                std::size_t lambda);
/// All normal pi-subgroups Z and all G-invariant lambda.
std::vector<RelativeRow> relative_suite(Workspace& ws, const PiConfig& pi);

/// Vertex formula, witness consistency, and the partition of I_pi(G) by vertices.
SuiteResult vertex_suite(Workspace& ws, const PiConfig& pi);
/// Normal pi'-subgroups N: transfer to G/N is a bijection, N lies in every vertex, vertices map to vertices.
SuiteResult quotient_suite(Workspace& ws, const PiConfig& pi);
/// Clifford correspondence over each member of a chief series.
SuiteResult clifford_suite(Workspace& ws, const PiConfig& pi);
/// One N_G(Q)-orbit of constituents with a vertex-Q Clifford correspondent.
SuiteResult orbit_suite(Workspace& ws, const PiConfig& pi);
/// |I(G|Q)| as a sum over N_G(Q)-orbits of Q-invariant members of I_pi(K).
SuiteResult sum_formula_suite(Workspace& ws, const PiConfig& pi);
/// Vertices between Q and N_G(Q) for K a normal pi-subgroup with KQ normal.
SuiteResult normalizer_vertex_suite(Workspace& ws, const PiConfig& pi);
/// Counts over theta are unchanged modulo a normal pi'-subgroup L <= Q.
SuiteResult pi_prime_quotient_suite(Workspace& ws, const PiConfig& pi);

}  // namespace piw
