#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "spl/circulant_graph.hpp"
#include "spl/error.hpp"

namespace spl {

using Exponent = std::uint32_t;

/// Exponent vector (a_1, ..., a_n) of x_1^{a_1} ... x_n^{a_n}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  /// x_i x_j in nvars variables, 1-based.
  static Monomial edge(std::size_t nvars, const Edge& e) {
    Monomial m(nvars);
    m.exps_.at(static_cast<std::size_t>(e.u - 1)) += 1;
    m.exps_.at(static_cast<std::size_t>(e.v - 1)) += 1;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }

  /// Vertex weight: sum of the exponents over a set of 1-based indices.
  std::uint64_t weight(const VertexSet& vertices) const {
    std::uint64_t w = 0;
    for (int v : vertices.members) w += exps_.at(static_cast<std::size_t>(v - 1));
    return w;
  }

  /// Bit i set when a_{i+1} > 0. Only the first 64 variables are tracked,
  /// which covers every graph the library builds.
  std::uint64_t support_mask() const noexcept {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < exps_.size() && i < 64; ++i)
      if (exps_[i] != 0) m |= std::uint64_t{1} << i;
    return m;
  }

  bool divides(const Monomial& other) const {
    check_same_size(other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  Monomial& operator*=(const Monomial& other) {
    check_same_size(other);
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] = checked_add(exps_[i], other.exps_[i]);
    return *this;
  }

  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_same_size(b);
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return m;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check_same_size(b);
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return m;
  }

  /// a / b; b must divide a.
  friend Monomial quotient(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw parameter_error("quotient of non-divisible monomials");
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = a.exps_[i] - b.exps_[i];
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Wire format "a1,a2,...,an".
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (i != 0) s += ',';
      s += std::to_string(exps_[i]);
    }
    return s;
  }

  /// Human form, e.g. "x1^2*x3"; the unit monomial prints as "1".
  std::string pretty() const {
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += "x" + std::to_string(i + 1);
      if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s.empty() ? "1" : s;
  }

  static Monomial parse(const std::string& text) {
    std::vector<Exponent> exps;
    std::stringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
      const auto b = field.find_first_not_of(" \t");
      const auto e = field.find_last_not_of(" \t");
      if (b == std::string::npos) throw parameter_error("empty exponent in monomial \"" + text + "\"");
      field = field.substr(b, e - b + 1);
      if (field.find_first_not_of("0123456789") != std::string::npos)
        throw parameter_error("bad exponent \"" + field + "\" in monomial \"" + text + "\"");
      const unsigned long long v = std::stoull(field);
      if (v > std::numeric_limits<Exponent>::max()) throw overflow_error("exponent too large: " + field);
      exps.push_back(static_cast<Exponent>(v));
    }
    if (exps.empty()) throw parameter_error("empty monomial");
    return Monomial(std::move(exps));
  }

 private:
  void check_same_size(const Monomial& other) const {
    if (other.exps_.size() != exps_.size())
      throw parameter_error("monomials over different variable counts (" +
                            std::to_string(exps_.size()) + " vs " +
                            std::to_string(other.exps_.size()) + ")");
  }

  static Exponent checked_add(Exponent a, Exponent b) {
    if (a > std::numeric_limits<Exponent>::max() - b) throw overflow_error("exponent overflow");
    return a + b;
  }

  std::vector<Exponent> exps_;
};

/// Canonical order: total degree ascending, then lexicographically descending
/// exponent vectors (so x1 x2 precedes x1 x3 precedes x2 x3).
struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                        a.exponents().begin(), a.exponents().end());
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Exponent e : m.exponents()) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Calls f on every exponent vector of length nvars with entries <= cap and
/// total degree == degree. Vectors are visited in canonical order.
inline void for_each_monomial_of_degree(std::size_t nvars, std::uint64_t degree, Exponent cap,
                                        const std::function<void(const Monomial&)>& f) {
  Monomial m(nvars);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == nvars) {
      if (left <= cap) {
        m[i] = static_cast<Exponent>(left);
        f(m);
        m[i] = 0;
      }
      return;
    }
    const std::uint64_t top = std::min<std::uint64_t>(left, cap);
    for (std::uint64_t e = top + 1; e-- > 0;) {
      m[i] = static_cast<Exponent>(e);
      rec(i + 1, left - e);
    }
    m[i] = 0;
  };
  if (nvars == 0) {
    if (degree == 0) f(m);
    return;
  }
  rec(0, degree);
}

/// Calls f on every exponent vector of length nvars with every entry <= cap.
inline void for_each_monomial_in_box(std::size_t nvars, Exponent cap,
                                     const std::function<void(const Monomial&)>& f) {
  Monomial m(nvars);
  while (true) {
    f(m);
    std::size_t i = 0;
    while (i < nvars && m[i] == cap) m[i++] = 0;
    if (i == nvars) return;
    ++m[i];
  }
}

}  // namespace spl
