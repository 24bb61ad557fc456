#ifndef FIBHESS_BIVAR_POLY_HPP
#define FIBHESS_BIVAR_POLY_HPP

#include "fibhess/gaussian_int.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fibhess {

/// x^xexp * y^yexp. Ordered lexicographically on (xexp, yexp).
struct Monomial {
  std::uint32_t xexp = 0;
  std::uint32_t yexp = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  friend Monomial operator*(Monomial a, Monomial b) {
    return {a.xexp + b.xexp, a.yexp + b.yexp};
  }
};

/// Bivariate polynomial in x, y over the Gaussian integers, kept in
/// canonical form: terms in descending monomial order, no zero coefficients.
class BivarPoly {
 public:
  using TermMap = std::map<Monomial, GaussianInt, std::greater<Monomial>>;

  BivarPoly() = default;
  BivarPoly(GaussianInt c) { add_term({0, 0}, std::move(c)); }
  BivarPoly(int c) : BivarPoly(GaussianInt(c)) {}

  static BivarPoly x() { return monomial({1, 0}); }
  static BivarPoly y() { return monomial({0, 1}); }
  static BivarPoly monomial(Monomial m, GaussianInt c = 1) {
    BivarPoly p;
    p.add_term(m, std::move(c));
    return p;
  }

  /// Builds from an arbitrary (possibly unordered, repeated, zero) term list.
  static BivarPoly from_terms(const std::vector<std::pair<Monomial, GaussianInt>>& terms) {
    BivarPoly p;
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of m (zero when absent).
  GaussianInt coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianInt() : it->second;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }

  /// Largest x exponent present; 0 for the zero polynomial.
  std::uint32_t x_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.xexp);
    return d;
  }

  bool all_real() const {
    for (const auto& [m, c] : terms_)
      if (!c.is_real()) return false;
    return true;
  }

  BivarPoly operator-() const {
    BivarPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  BivarPoly& operator+=(const BivarPoly& b) {
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& b) {
    for (const auto& [m, c] : b.terms_) add_term(m, -c);
    return *this;
  }

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }

  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  BivarPoly& operator*=(const BivarPoly& b) { return *this = *this * b; }

  /// Multiplies every coefficient by a scalar.
  BivarPoly scaled(const GaussianInt& s) const {
    if (s.is_zero()) return {};
    BivarPoly r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
  }

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical text: `x^5 + 2*x*y`, `4*x^2 - 1`, `(1+2i)*x*y^2`, `0`.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const BivarPoly& p) {
    return os << p.to_string();
  }

 private:
  void add_term(Monomial m, GaussianInt c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermMap terms_;
};

namespace detail {

inline std::string render_monomial(Monomial m) {
  std::string s;
  auto var = [&s](char name, std::uint32_t e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += name;
    if (e > 1) s += '^' + std::to_string(e);
  };
  var('x', m.xexp);
  var('y', m.yexp);
  return s;
}

}  // namespace detail

inline std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    // Pull a leading minus out of real or purely imaginary coefficients.
    bool negative = (c.is_real() && c.re() < 0) || (c.re().is_zero() && c.im() < 0);
    GaussianInt mag = negative ? -c : c;
    std::string mono = detail::render_monomial(m);
    std::string coef;
    if (mono.empty()) {
      coef = mag.to_string();
    } else if (!mag.is_one()) {
      bool mixed = !mag.re().is_zero() && !mag.im().is_zero();
      coef = mixed ? "(" + mag.to_string() + ")*" : mag.to_string() + "*";
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coef + mono;
    first = false;
  }
  return out;
}

/// Replaces x by xsub and y by ysub and expands.
inline BivarPoly substitute(const BivarPoly& p, const BivarPoly& xsub, const BivarPoly& ysub) {
  std::vector<BivarPoly> xpow{BivarPoly(1)};
  std::vector<BivarPoly> ypow{BivarPoly(1)};
  auto power = [](std::vector<BivarPoly>& cache, const BivarPoly& base, std::uint32_t e) -> const BivarPoly& {
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  BivarPoly r;
  for (const auto& [m, c] : p.terms()) {
    r += (power(xpow, xsub, m.xexp) * power(ypow, ysub, m.yexp)).scaled(c);
  }
  return r;
}

/// Exact value of p at (x0, y0).
inline GaussianInt eval_at(const BivarPoly& p, const GaussianInt& x0, const GaussianInt& y0) {
  std::vector<GaussianInt> xpow{GaussianInt(1)};
  std::vector<GaussianInt> ypow{GaussianInt(1)};
  auto power = [](std::vector<GaussianInt>& cache, const GaussianInt& base, std::uint32_t e) -> const GaussianInt& {
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  GaussianInt r;
  for (const auto& [m, c] : p.terms()) r += c * power(xpow, x0, m.xexp) * power(ypow, y0, m.yexp);
  return r;
}

}  // namespace fibhess

#endif  // FIBHESS_BIVAR_POLY_HPP
