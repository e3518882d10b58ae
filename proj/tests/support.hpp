#pragma once

// Shared fixtures and brute-force oracles for the unit tests.

#include <algorithm>
#include <complex>
#include <set>
#include <string>
#include <vector>

#include "piw/corpus.hpp"
#include "piw/finite_group.hpp"
#include "piw/permutation.hpp"

namespace piw::test {

inline GroupPtr group(const std::string& name) {
  auto spec = find_builtin(name);
  if (!spec) throw std::runtime_error("no builtin group " + name);
  return build_group(*spec);
}

inline GroupPtr group_from(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Permutation> ps;
  for (const auto& g : gens) ps.push_back(Permutation::parse(g, degree));
  return make_finite_group(make_group(degree, std::move(ps)));
}

/// Closure of a generating set by repeated multiplication.
inline std::set<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> out{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Permutation y = x * g;
        if (out.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

/// Every subgroup, as a sorted element-index list: cyclic subgroups closed under joins.
inline std::set<std::vector<std::size_t>> all_subgroups(const FiniteGroup& g) {
  auto gen = [&](const std::vector<std::size_t>& idx) {
    std::vector<Permutation> ps;
    for (auto i : idx) ps.push_back(g.element(i));
    std::vector<std::size_t> out;
    for (const auto& p : closure(g.degree(), ps)) out.push_back(g.index(p));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::set<std::vector<std::size_t>> subs;
  for (std::size_t i = 0; i < g.elements().size(); ++i) subs.insert(gen({i}));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<std::size_t>> cur(subs.begin(), subs.end());
    for (std::size_t a = 0; a < cur.size(); ++a) {
      for (std::size_t b = a + 1; b < cur.size(); ++b) {
        std::vector<std::size_t> u = cur[a];
        u.insert(u.end(), cur[b].begin(), cur[b].end());
        if (subs.insert(gen(u)).second) grew = true;
      }
    }
  }
  return subs;
}

inline std::vector<std::size_t> conjugate_indices(const FiniteGroup& g, const std::vector<std::size_t>& h, std::size_t x) {
  std::vector<std::size_t> out;
  for (auto i : h) out.push_back(g.conj(i, x));
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of conjugacy classes of subgroups, counted from the full subgroup list.
inline std::size_t subgroup_class_count(const FiniteGroup& g) {
  std::set<std::vector<std::size_t>> seen;
  std::size_t classes = 0;
  for (const auto& h : all_subgroups(g)) {
    if (seen.count(h)) continue;
    ++classes;
    for (std::size_t x = 0; x < g.elements().size(); ++x) seen.insert(conjugate_indices(g, h, x));
  }
  return classes;
}

inline bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-7) { return std::abs(a - b) < tol; }

}  // namespace piw::test
