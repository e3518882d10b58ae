#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "piw/workspace.hpp"

namespace piw {

/// Q acting on K by conjugation inside the workspace root, with gcd(|K|,|Q|) = 1.
/// All sets are root coordinates.
struct CoprimeAction {
  ElementSet k;
  ElementSet q;
  ElementSet c;  // C_K(Q)
};

/// Throws DomainError unless Q normalizes K and the orders are coprime.
CoprimeAction make_coprime_action(Workspace& ws, const ElementSet& k, const ElementSet& q);

/// The correspondence on all of Irr_Q(K), as indices into the tables of K and C_K(Q).
struct GlaubermanMap {
  std::vector<std::size_t> invariant;  // Irr_Q(K)
  std::vector<std::size_t> image;      // image[i] corresponds to invariant[i]
};

/// Descends a chief series 1 = M_0 < ... < M_r = Q: at each step the character of
/// C_K(M_{i-1}) restricts to C_K(M_i) with exactly one constituent of multiplicity
/// prime to |M_i/M_{i-1}|. `prefer_last` picks a second chief series where possible.
/// Throws Unsupported for nonsolvable Q and TheoryViolation if a step is not unique.
GlaubermanMap glauberman_map(Workspace& ws, const CoprimeAction& act, bool prefer_last = false);

/// theta* for one Q-invariant theta (table index in K). Throws DomainError if theta is not Q-invariant.
std::size_t glauberman_correspondent(Workspace& ws, const CoprimeAction& act, std::size_t theta,
                                     bool prefer_last = false);

struct GlaubermanCheck {
  std::size_t invariant = 0;     // |Irr_Q(K)|
  std::size_t c_characters = 0;  // |Irr(C_K(Q))|
  bool bijective = false;
  bool series_independent = false;
  bool degree_congruence = true;  // checked only for Q of prime-power order
  bool natural = false;
  std::string detail;
  bool ok() const { return bijective && series_independent && degree_congruence && natural; }
};

/// Bijectivity, independence of the chief series, theta(1) = +-theta*(1) mod q for |Q| a power of q,
/// and (theta^n)* = (theta*)^n for `samples` seeded random n in N_G(Q) and N_G(K).
GlaubermanCheck check_glauberman(Workspace& ws, const CoprimeAction& act, std::uint64_t seed, int samples = 8);

struct BasicRow {
  std::uint64_t k_order = 0;
  std::uint64_t q_order = 0;
  std::size_t tau = 0;       // index in the table of K
  std::size_t tau_star = 0;  // index in the table of C_K(Q)
  std::size_t left = 0;      // |I(G|Q,tau)|
  std::size_t right = 0;     // |I(N_G(Q)|Q,tau*)|
  bool ok() const { return left == right; }
};

/// K a normal pi-subgroup, Q a pi'-subgroup with KQ normal, tau in Irr(K) Q-invariant.
/// Throws DomainError naming the first failed hypothesis.
BasicRow basic_theorem_check(Workspace& ws, const PiConfig& pi, const ElementSet& k, const ElementSet& q,
                             std::size_t tau);

/// Pairs (K, Q): K a normal pi-subgroup of the root, Q a pi'-subgroup class representative with KQ normal.
std::vector<std::pair<ElementSet, ElementSet>> coprime_instances(Workspace& ws, const PiConfig& pi);

}  // namespace piw
