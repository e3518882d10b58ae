#include "piw/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "piw/errors.hpp"

namespace piw {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || hit[p]) {
      throw InputError("permutation images are not a bijection of {1.." +
                       std::to_string(images_.size()) + "}");
    }
    hit[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      Point b = cycle[(i + 1) % cycle.size()];
      if (a >= degree || b >= degree) {
        throw InputError("cycle point " + std::to_string(std::max(a, b) + 1) +
                         " exceeds degree " + std::to_string(degree));
      }
      if (used[a]) {
        throw InputError("point " + std::to_string(a + 1) + " appears twice in cycle notation");
      }
      used[a] = true;
      images[a] = b;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw InputError("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') {
      throw InputError("expected '(' in permutation \"" + std::string(text) + "\"");
    }
    ++i;
    std::vector<Point> cycle;
    skip_space();
    while (i < text.size() && text[i] != ')') {
      skip_space();
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw InputError("expected a point number in permutation \"" + std::string(text) + "\"");
      }
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > degree + 1) break;
        ++i;
      }
      if (value == 0 || value > degree) {
        throw InputError("point " + std::to_string(value) + " out of range 1.." +
                         std::to_string(degree));
      }
      cycle.push_back(static_cast<Point>(value - 1));
      skip_space();
      if (i < text.size() && text[i] == ',') ++i;
      skip_space();
    }
    if (i == text.size()) throw InputError("unterminated cycle in \"" + std::string(text) + "\"");
    ++i;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::operator*(const Permutation& other) const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[x] = other.images_[images_[x]];
  return r;
}

Permutation& Permutation::operator*=(const Permutation& other) {
  for (auto& p : images_) p = other.images_[p];
  return *this;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[images_[x]] = static_cast<Point>(x);
  return r;
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1U) result *= base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

Permutation Permutation::conjugate(const Permutation& g) const {
  // x^(g^-1 h g): the point x^g is sent to (x^h)^g.
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[g.images_[x]] = g.images_[images_[x]];
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out << '(';
    bool first = true;
    for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first) out << ',';
      out << (y + 1);
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace piw
