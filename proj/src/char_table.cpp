#include "piw/char_table.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_set>

#include <json.hpp>

#include "piw/errors.hpp"
#include "piw/numtheory.hpp"
#include "piw/subgroups.hpp"

namespace piw {

namespace {

Rational ratio(std::uint64_t num, std::uint64_t den) {
  Rational r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_ || values_.size() != group_->classes().size()) {
    throw DomainError("ClassFunction: expected one value per conjugacy class");
  }
}

ClassFunction ClassFunction::trivial(const GroupPtr& group) {
  return ClassFunction(group, std::vector<Cyclotomic>(group->classes().size(), Cyclotomic(1)));
}

ClassFunction ClassFunction::regular(const GroupPtr& group) {
  std::vector<Cyclotomic> values(group->classes().size(), Cyclotomic(0));
  values[0] = Cyclotomic(Rational(static_cast<unsigned long>(group->order())));
  return ClassFunction(group, std::move(values));
}

std::uint64_t ClassFunction::degree() const {
  auto d = values_.front().as_rational_integer();
  if (!d || *d <= 0) throw DomainError("degree is not a positive integer: " + values_.front().to_string());
  return d->get_ui();
}

void ClassFunction::check_same_group(const ClassFunction& other) const {
  if (group_.get() != other.group_.get()) throw DomainError("class functions on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  check_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  check_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& other) {
  check_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& r) {
  for (auto& v : values_) v *= r;
  return *this;
}

ClassFunction ClassFunction::conj() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = v.conj();
  return r;
}

ClassFunction ClassFunction::lifted(std::uint64_t e) const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = v.lifted(e);
  return r;
}

std::string ClassFunction::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ", ";
    out += values_[i].to_string();
  }
  return out + "]";
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group_.get() == b.group_.get() && a.values_ == b.values_;
}

// ---------------------------------------------------------------------------
// Dixon-Schneider over F_p

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

struct Field {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mulmod(a, b, p); }
  std::uint64_t inv(std::uint64_t a) const { return invmod(a, p); }
};

// Reduced row echelon form in place; drops zero rows and returns pivot columns.
std::vector<std::size_t> rref(Mat& rows, const Field& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t s = f.inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const std::uint64_t u = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(u, rows[rank][k]));
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

// Basis of {v : m v = 0} for a square matrix.
Mat null_space(Mat m, const Field& f) {
  const std::size_t n = m.size();
  auto pivots = rref(m, f);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.sub(0, m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial, constant term first, via reduction to Hessenberg form.
Vec characteristic_polynomial(Mat a, const Field& f) {
  const std::size_t n = a.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && a[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(a[i], a[j + 1]);
      for (auto& row : a) std::swap(row[i], row[j + 1]);
    }
    const std::uint64_t pivot_inv = f.inv(a[j + 1][j]);
    for (std::size_t k = j + 2; k < n; ++k) {
      if (a[k][j] == 0) continue;
      const std::uint64_t u = f.mul(a[k][j], pivot_inv);
      for (std::size_t c = 0; c < n; ++c) a[k][c] = f.sub(a[k][c], f.mul(u, a[j + 1][c]));
      for (std::size_t r = 0; r < n; ++r) a[r][j + 1] = f.add(a[r][j + 1], f.mul(u, a[r][k]));
    }
  }
  std::vector<Vec> polys{Vec{1}};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec next(m + 1, 0);
    const Vec& prev = polys[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k + 1] = f.add(next[k + 1], prev[k]);
      next[k] = f.sub(next[k], f.mul(a[m - 1][m - 1], prev[k]));
    }
    std::uint64_t product = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      product = f.mul(product, a[i][i - 1]);
      const std::uint64_t coeff = f.mul(a[i - 1][m - 1], product);
      if (coeff != 0) {
        const Vec& q = polys[i - 1];
        for (std::size_t k = 0; k < q.size(); ++k) next[k] = f.sub(next[k], f.mul(coeff, q[k]));
      }
    }
    polys.push_back(std::move(next));
  }
  return polys[n];
}

std::vector<std::uint64_t> roots_mod_p(const Vec& poly, const Field& f) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < f.p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t k = poly.size(); k-- > 0;) v = f.add(f.mul(v, x), poly[k]);
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

struct RawCharacter {
  std::vector<Cyclotomic> values;
  std::uint64_t degree = 0;
  std::uint64_t det_order = 1;
};

class DixonSchneider {
 public:
  DixonSchneider(const FiniteGroup& g, std::uint64_t conductor)
      : g_(g), e_(conductor), r_(g.classes().size()), structure_(r_) {
    inverse_.resize(r_);
    power_classes_.resize(r_);
    for (std::size_t j = 0; j < r_; ++j) {
      const auto& cls = g.classes()[j];
      inverse_[j] = g.class_of(g.inv(cls.representative));
      for (std::uint64_t t = 0; t < cls.element_order; ++t) {
        power_classes_[j].push_back(g.class_of(g.power(cls.representative, static_cast<std::int64_t>(t))));
      }
    }
  }

  const std::vector<std::size_t>& inverse_classes() const { return inverse_; }

  std::optional<std::vector<RawCharacter>> run(std::uint64_t p) {
    const Field f{p};
    const ModularEmbedding emb(e_, p);
    auto vectors = eigenvectors(f);
    if (!vectors) return std::nullopt;
    const std::uint64_t order = g_.order();
    std::vector<RawCharacter> out;
    for (auto& w : *vectors) {
      if (w[0] == 0) return std::nullopt;
      const std::uint64_t s0 = f.inv(w[0]);
      for (auto& x : w) x = f.mul(x, s0);
      std::uint64_t sum = 0;
      for (std::size_t j = 0; j < r_; ++j) {
        sum = f.add(sum, f.mul(f.mul(w[j], w[inverse_[j]]), f.inv(g_.classes()[j].size % p)));
      }
      if (sum == 0) return std::nullopt;
      const std::uint64_t square = f.mul(order % p, f.inv(sum));
      std::uint64_t degree = 0;
      for (std::uint64_t d = 1; d * d <= order; ++d) {
        if (d * d % p == square) {
          degree = d;
          break;
        }
      }
      if (degree == 0) return std::nullopt;
      Vec values(r_);
      for (std::size_t j = 0; j < r_; ++j) {
        values[j] = f.mul(f.mul(w[j], degree % p), f.inv(g_.classes()[j].size % p));
      }
      RawCharacter chi;
      chi.degree = degree;
      for (std::size_t j = 0; j < r_; ++j) {
        const std::uint64_t m = g_.classes()[j].element_order;
        const std::uint64_t step = e_ / m;
        const std::uint64_t m_inv = f.inv(m % p);
        std::vector<Rational> coeffs(e_, 0);
        std::uint64_t total = 0;
        std::uint64_t det_exponent = 0;
        for (std::uint64_t k = 0; k < m; ++k) {
          std::uint64_t a = 0;
          for (std::uint64_t t = 0; t < m; ++t) {
            const auto exponent = -static_cast<std::int64_t>(step * ((k * t) % m));
            a = f.add(a, f.mul(values[power_classes_[j][t]], emb.root(exponent)));
          }
          a = f.mul(a, m_inv);
          if (a > degree) return std::nullopt;
          total += a;
          det_exponent = (det_exponent + k * a) % m;
          coeffs[k * step] += static_cast<unsigned long>(a);
        }
        if (total != degree) return std::nullopt;
        chi.values.push_back(Cyclotomic::from_exponents(e_, coeffs));
        chi.det_order = std::lcm(chi.det_order, m / std::gcd(det_exponent, m));
      }
      out.push_back(std::move(chi));
    }
    return out;
  }

 private:
  // (A_j)[k][l] = #{x in C_j : x^-1 g_l in C_k}, so A_j w = omega_j w for central characters.
  const std::vector<std::vector<std::uint32_t>>& structure(std::size_t j) {
    auto& a = structure_[j];
    if (!a.empty()) return a;
    a.assign(r_, std::vector<std::uint32_t>(r_, 0));
    const auto& members = g_.classes().members(j);
    for (std::size_t l = 0; l < r_; ++l) {
      const std::size_t rep = g_.classes()[l].representative;
      for (auto x : members) ++a[g_.class_of(g_.mul(g_.inv(x), rep))][l];
    }
    return a;
  }

  struct Space {
    Mat basis;  // rows in reduced echelon form
    std::vector<std::size_t> pivots;
    std::size_t next = 1;
  };

  std::optional<Mat> eigenvectors(const Field& f) {
    Space start;
    for (std::size_t i = 0; i < r_; ++i) {
      Vec v(r_, 0);
      v[i] = 1;
      start.basis.push_back(std::move(v));
      start.pivots.push_back(i);
    }
    std::vector<Space> stack{std::move(start)};
    Mat found;
    while (!stack.empty()) {
      Space s = std::move(stack.back());
      stack.pop_back();
      const std::size_t d = s.basis.size();
      if (d == 1) {
        found.push_back(std::move(s.basis.front()));
        continue;
      }
      if (s.next >= r_) return std::nullopt;
      const auto& a = structure(s.next);
      Mat images(d, Vec(r_, 0));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < r_; ++k) {
          std::uint64_t acc = 0;
          for (std::size_t l = 0; l < r_; ++l) {
            if (a[k][l] != 0 && s.basis[i][l] != 0) acc = f.add(acc, f.mul(a[k][l] % f.p, s.basis[i][l]));
          }
          images[i][k] = acc;
        }
      }
      Mat restricted(d, Vec(d, 0));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) restricted[k][i] = images[i][s.pivots[k]];
      }
      const auto roots = roots_mod_p(characteristic_polynomial(restricted, f), f);
      if (roots.empty()) return std::nullopt;
      if (roots.size() == 1) {
        ++s.next;
        stack.push_back(std::move(s));
        continue;
      }
      std::size_t total = 0;
      for (auto lambda : roots) {
        Mat shifted = restricted;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
        Space part;
        for (const auto& v : null_space(shifted, f)) {
          Vec w(r_, 0);
          for (std::size_t i = 0; i < d; ++i) {
            if (v[i] == 0) continue;
            for (std::size_t l = 0; l < r_; ++l) w[l] = f.add(w[l], f.mul(v[i], s.basis[i][l]));
          }
          part.basis.push_back(std::move(w));
        }
        part.pivots = rref(part.basis, f);
        part.next = s.next + 1;
        total += part.basis.size();
        stack.push_back(std::move(part));
      }
      if (total != d) return std::nullopt;
    }
    if (found.size() != r_) return std::nullopt;
    return found;
  }

  const FiniteGroup& g_;
  std::uint64_t e_;
  std::size_t r_;
  std::vector<std::vector<std::vector<std::uint32_t>>> structure_;
  std::vector<std::size_t> inverse_;
  std::vector<std::vector<std::size_t>> power_classes_;
};

bool orthonormal(const FiniteGroup& g, const std::vector<RawCharacter>& chars,
                 const std::vector<std::size_t>& inverse) {
  const auto order = Cyclotomic(Rational(static_cast<unsigned long>(g.order())));
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = i; j < chars.size(); ++j) {
      Cyclotomic sum;
      for (std::size_t c = 0; c < g.classes().size(); ++c) {
        sum += chars[i].values[c] * chars[j].values[inverse[c]] *
               Rational(static_cast<unsigned long>(g.classes()[c].size));
      }
      if (!(sum == (i == j ? order : Cyclotomic(0)))) return false;
    }
  }
  return true;
}

}  // namespace

CharacterTable character_table(const GroupPtr& gp, std::uint64_t conductor) {
  const FiniteGroup& g = *gp;
  const std::uint64_t e = conductor == 0 ? g.exponent() : conductor;
  if (e % g.exponent() != 0) {
    throw DomainError("character_table: conductor " + std::to_string(e) + " is not a multiple of the exponent " +
                      std::to_string(g.exponent()));
  }
  DixonSchneider ds(g, e);
  std::uint64_t p = least_prime_one_mod(e, 1);
  while (p * p <= 4 * g.order()) p = least_prime_one_mod(e, p);
  constexpr int kAttempts = 12;
  for (int attempt = 0; attempt < kAttempts; ++attempt, p = least_prime_one_mod(e, p)) {
    auto raw = ds.run(p);
    if (!raw || raw->size() != g.classes().size()) continue;
    std::uint64_t sum_squares = 0;
    for (const auto& chi : *raw) sum_squares += chi.degree * chi.degree;
    if (sum_squares != g.order() || !orthonormal(g, *raw, ds.inverse_classes())) continue;

    auto is_trivial = [](const RawCharacter& chi) {
      return std::all_of(chi.values.begin(), chi.values.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
    };
    std::sort(raw->begin(), raw->end(), [&](const RawCharacter& a, const RawCharacter& b) {
      const bool ta = is_trivial(a);
      const bool tb = is_trivial(b);
      if (ta != tb) return ta;
      if (a.degree != b.degree) return a.degree < b.degree;
      return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(), b.values.end());
    });
    CharacterTable table;
    table.group_ = gp;
    table.conductor_ = e;
    table.prime_ = p;
    table.inverse_class_ = ds.inverse_classes();
    for (auto& chi : *raw) {
      table.degrees_.push_back(chi.degree);
      table.det_orders_.push_back(chi.det_order);
      table.chars_.emplace_back(gp, std::move(chi.values));
    }
    return table;
  }
  throw ResourceError("character_table: no working prime among " + std::to_string(kAttempts) + " candidates");
}

std::vector<std::int64_t> CharacterTable::decompose(const ClassFunction& f) const {
  if (f.group().get() != group_.get()) throw DomainError("decompose: class function on another group");
  const FiniteGroup& g = *group_;
  const Rational inv_order = ratio(1, g.order());
  std::vector<std::int64_t> out;
  out.reserve(chars_.size());
  for (const auto& chi : chars_) {
    Cyclotomic sum;
    for (std::size_t c = 0; c < g.classes().size(); ++c) {
      if (f[c].is_zero()) continue;
      sum += f[c] * chi[inverse_class_[c]] * Rational(static_cast<unsigned long>(g.classes()[c].size));
    }
    sum *= inv_order;
    auto n = sum.as_rational_integer();
    if (!n) throw DomainError("decompose: non-integral multiplicity " + sum.to_string());
    out.push_back(n->get_si());
  }
  return out;
}

std::size_t CharacterTable::index_of(const ClassFunction& f) const {
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    if (chars_[i] == f) return i;
  }
  return chars_.size();
}

std::string CharacterTable::to_json(int indent) const {
  using nlohmann::json;
  const FiniteGroup& g = *group_;
  json classes = json::array();
  for (const auto& c : g.classes()) {
    classes.push_back({{"representative", g.element(c.representative).to_string()},
                       {"size", c.size},
                       {"centralizer_order", c.centralizer_order},
                       {"element_order", c.element_order}});
  }
  json characters = json::array();
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    json values = json::array();
    for (const auto& v : chars_[i].values()) values.push_back(v.to_string());
    characters.push_back({{"degree", degrees_[i]}, {"determinant_order", det_orders_[i]}, {"values", values}});
  }
  json out = {{"order", g.order()}, {"conductor", conductor_}, {"classes", classes}, {"characters", characters}};
  return out.dump(indent);
}

// ---------------------------------------------------------------------------
// Inner products, restriction, induction

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group().get() != g.group().get()) throw DomainError("inner_product: class functions on different groups");
  const FiniteGroup& grp = *f.group();
  Cyclotomic sum;
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[c].is_zero() || g[c].is_zero()) continue;
    sum += f[c] * g[c].conj() * Rational(static_cast<unsigned long>(grp.classes()[c].size));
  }
  sum *= ratio(1, grp.order());
  auto r = sum.as_rational();
  if (!r) throw DomainError("inner_product: result is not rational: " + sum.to_string());
  return *r;
}

std::vector<std::size_t> class_fusion(const FiniteGroup& h, const FiniteGroup& g) {
  std::vector<std::size_t> fusion;
  fusion.reserve(h.classes().size());
  for (const auto& c : h.classes()) {
    auto cls = g.class_of(h.element(c.representative));
    if (!cls) throw DomainError("class_fusion: " + h.element(c.representative).to_string() + " is not in the group");
    fusion.push_back(*cls);
  }
  return fusion;
}

ClassFunction restrict_to(const ClassFunction& chi, const GroupPtr& h, const std::vector<std::size_t>& fusion) {
  std::vector<Cyclotomic> values;
  values.reserve(fusion.size());
  for (auto c : fusion) values.push_back(chi[c]);
  return ClassFunction(h, std::move(values));
}

ClassFunction restrict_to(const ClassFunction& chi, const GroupPtr& h) {
  return restrict_to(chi, h, class_fusion(*h, *chi.group()));
}

ClassFunction induce(const ClassFunction& theta, const GroupPtr& g, const std::vector<std::size_t>& fusion) {
  const FiniteGroup& h = *theta.group();
  std::vector<Cyclotomic> values(g->classes().size());
  for (std::size_t c = 0; c < fusion.size(); ++c) {
    if (theta[c].is_zero()) continue;
    values[fusion[c]] += theta[c] * ratio(1, h.classes()[c].centralizer_order);
  }
  for (std::size_t j = 0; j < values.size(); ++j) {
    values[j] *= Rational(static_cast<unsigned long>(g->classes()[j].centralizer_order));
  }
  return ClassFunction(g, std::move(values));
}

ClassFunction induce(const ClassFunction& theta, const GroupPtr& g) {
  return induce(theta, g, class_fusion(*theta.group(), *g));
}

// ---------------------------------------------------------------------------
// Determinants and defect

std::vector<std::uint64_t> eigenvalue_multiplicities(const ClassFunction& chi, std::size_t cls) {
  const FiniteGroup& g = *chi.group();
  const std::uint64_t degree = chi.degree();
  std::uint64_t e = g.exponent();
  for (const auto& v : chi.values()) e = std::lcm(e, v.conductor());
  const std::uint64_t p = least_prime_one_mod(e, 2 * degree + g.order());
  const ModularEmbedding emb(e, p);
  const Field f{p};
  const std::size_t rep = g.classes()[cls].representative;
  const std::uint64_t m = g.classes()[cls].element_order;
  const std::uint64_t step = e / m;
  Vec values;
  for (std::uint64_t t = 0; t < m; ++t) {
    values.push_back(emb(chi[g.class_of(g.power(rep, static_cast<std::int64_t>(t)))]));
  }
  std::vector<std::uint64_t> out;
  std::uint64_t total = 0;
  const std::uint64_t m_inv = f.inv(m % p);
  for (std::uint64_t k = 0; k < m; ++k) {
    std::uint64_t a = 0;
    for (std::uint64_t t = 0; t < m; ++t) {
      a = f.add(a, f.mul(values[t], emb.root(-static_cast<std::int64_t>(step * ((k * t) % m)))));
    }
    a = f.mul(a, m_inv);
    if (a > degree) throw DomainError("eigenvalue_multiplicities: not a character on a cyclic subgroup");
    total += a;
    out.push_back(a);
  }
  if (total != degree) throw DomainError("eigenvalue_multiplicities: not a character on a cyclic subgroup");
  return out;
}

namespace {

// det(chi) at class cls is zeta_m^s; returns (s, m).
std::pair<std::uint64_t, std::uint64_t> determinant_exponent(const ClassFunction& chi, std::size_t cls) {
  const auto a = eigenvalue_multiplicities(chi, cls);
  const std::uint64_t m = a.size();
  std::uint64_t s = 0;
  for (std::uint64_t k = 0; k < m; ++k) s = (s + k * a[k]) % m;
  return {s, m};
}

}  // namespace

ClassFunction determinant(const ClassFunction& chi) {
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < chi.size(); ++c) {
    auto [s, m] = determinant_exponent(chi, c);
    values.push_back(Cyclotomic::root_of_unity(m, static_cast<std::int64_t>(s)));
  }
  return ClassFunction(chi.group(), std::move(values));
}

std::uint64_t determinant_order(const ClassFunction& chi) {
  std::uint64_t order = 1;
  for (std::size_t c = 0; c < chi.size(); ++c) {
    auto [s, m] = determinant_exponent(chi, c);
    order = std::lcm(order, m / std::gcd(s, m));
  }
  return order;
}

bool has_pi_prime_defect_zero(const ClassFunction& chi, const PiConfig& pi) {
  const PiConfig pi_prime = pi.complement();
  return pi_prime.part(chi.degree()) == pi_prime.part(chi.group()->order());
}

// ---------------------------------------------------------------------------
// Subnormal subgroups and pi-special characters

std::vector<ElementSet> subnormal_subgroups(const FiniteGroup& g) {
  std::vector<ElementSet> all{g.full_set()};
  std::unordered_set<ElementSet, ElementSetHash> seen{g.full_set()};
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].count() == 1) continue;
    const ElementSet s = all[i];
    FiniteGroup sub(g.to_group(s));
    for (const auto& n : normal_subgroups(sub)) {
      ElementSet mapped(g.elements().size());
      for (auto x : n.indices()) mapped.set(g.index(sub.element(x)));
      if (seen.insert(mapped).second) all.push_back(std::move(mapped));
    }
  }
  std::sort(all.begin(), all.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return all;
}

SubnormalData::SubnormalData(GroupPtr g, std::uint64_t conductor) : group_(std::move(g)) {
  const std::uint64_t e = conductor == 0 ? group_->exponent() : conductor;
  for (auto& s : subnormal_subgroups(*group_)) {
    Entry entry;
    entry.group = s.count() == group_->order() ? group_ : make_finite_group(group_->to_group(s));
    entry.table = std::make_shared<const CharacterTable>(character_table(entry.group, e));
    entry.fusion = class_fusion(*entry.group, *group_);
    entry.set = std::move(s);
    entries_.push_back(std::move(entry));
  }
}

bool SubnormalData::is_pi_special(const ClassFunction& chi, const PiConfig& pi) const {
  if (chi.group().get() != group_.get()) throw DomainError("is_pi_special: character of another group");
  if (!pi.is_number(chi.degree())) return false;
  for (const auto& entry : entries_) {
    const auto mult = entry.table->decompose(restrict_to(chi, entry.group, entry.fusion));
    for (std::size_t i = 0; i < mult.size(); ++i) {
      if (mult[i] != 0 && !pi.is_number(entry.table->determinant_order(i))) return false;
    }
  }
  return true;
}

bool is_pi_special(const ClassFunction& chi, const PiConfig& pi) {
  if (!pi.is_number(chi.degree())) return false;
  return SubnormalData(chi.group()).is_pi_special(chi, pi);
}

}  // namespace piw
