#pragma once

// Numerical character table oracle, independent of the Dixon-Schneider code.

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "piw/finite_group.hpp"
#include "support.hpp"

namespace piw::test {

using Row = std::vector<std::complex<double>>;

/// Characters from the class-sum algebra acting on itself: the structure constants
/// a_ijk = #{(x, y) in C_i x C_j : xy = g_k} are counted over all element pairs, a
/// random combination of the matrices (a_ijk)_jk is diagonalised numerically, and
/// each eigenvector w (the central character) gives chi = chi(1) w_k / |C_k|.
inline std::vector<Row> class_algebra_table(const FiniteGroup& g) {
  const std::size_t r = g.classes().size();
  const std::size_t n = g.elements().size();
  std::vector<Eigen::MatrixXd> m(r, Eigen::MatrixXd::Zero(r, r));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = g.mul(x, y);
      const std::size_t k = g.class_of(xy);
      if (g.classes()[k].representative != xy) continue;
      m[g.class_of(x)](static_cast<Eigen::Index>(g.class_of(y)), static_cast<Eigen::Index>(k)) += 1.0;
    }
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(r, r);
  for (std::size_t i = 0; i < r; ++i) a += (1.0 + 0.37 * static_cast<double>(i * i % 11) + 0.11 * i) * m[i];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a);
  std::vector<Row> out;
  for (Eigen::Index c = 0; c < static_cast<Eigen::Index>(r); ++c) {
    Eigen::VectorXcd w = solver.eigenvectors().col(c);
    w /= w(0);
    double s = 0;
    for (std::size_t k = 0; k < r; ++k) s += std::norm(w(static_cast<Eigen::Index>(k))) / static_cast<double>(g.classes()[k].size);
    const double degree = std::sqrt(static_cast<double>(g.order()) / s);
    Row row;
    for (std::size_t k = 0; k < r; ++k) {
      row.push_back(degree * w(static_cast<Eigen::Index>(k)) / static_cast<double>(g.classes()[k].size));
    }
    out.push_back(row);
  }
  return out;
}

inline bool same_row(const Row& a, const Row& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!near(a[i], b[i], 1e-6)) return false;
  }
  return true;
}

}  // namespace piw::test
