#ifndef FIBHESS_HESSENBERG_HPP
#define FIBHESS_HESSENBERG_HPP

#include "fibhess/bivar_poly.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibhess {

/// Raised when a matrix is not lower Hessenberg or its band annotation lies.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square matrix over BivarPoly. Indices are 0-based in the API; the
/// lower-Hessenberg rule is entry(r, c) == 0 whenever c > r + 1.
///
/// `band()` optionally records p such that the only nonzero strictly-lower
/// entries sit on r - c == p. It is a hint for callers; evaluators decide
/// sparsity from the entries themselves.
class HessenbergMatrix {
 public:
  explicit HessenbergMatrix(std::size_t order, std::optional<std::size_t> band = std::nullopt)
      : order_(order), band_(band), entries_(order * order) {}

  std::size_t order() const noexcept { return order_; }
  std::optional<std::size_t> band() const noexcept { return band_; }

  const BivarPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * order_ + c]; }
  BivarPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * order_ + c]; }

  bool is_lower_hessenberg() const {
    for (std::size_t r = 0; r < order_; ++r)
      for (std::size_t c = r + 2; c < order_; ++c)
        if (!(*this)(r, c).is_zero()) return false;
    return true;
  }

  /// True when no band is recorded, or every strictly-lower nonzero entry
  /// lies on the recorded band.
  bool band_consistent() const {
    if (!band_) return true;
    for (std::size_t r = 0; r < order_; ++r)
      for (std::size_t c = 0; c < r; ++c)
        if (r - c != *band_ && !(*this)(r, c).is_zero()) return false;
    return true;
  }

  void require_lower_hessenberg() const {
    if (!is_lower_hessenberg()) throw ShapeError("matrix is not lower Hessenberg");
  }

  HessenbergMatrix with_band(std::optional<std::size_t> band) const {
    HessenbergMatrix m = *this;
    m.band_ = band;
    return m;
  }

  friend bool operator==(const HessenbergMatrix& a, const HessenbergMatrix& b) {
    return a.order_ == b.order_ && a.entries_ == b.entries_;
  }

  /// One row per line, e.g. `[x, -1, 0]`.
  std::string to_string() const {
    std::string out;
    for (std::size_t r = 0; r < order_; ++r) {
      out += '[';
      for (std::size_t c = 0; c < order_; ++c) {
        if (c) out += ", ";
        out += (*this)(r, c).to_string();
      }
      out += "]\n";
    }
    return out;
  }

 private:
  std::size_t order_;
  std::optional<std::size_t> band_;
  std::vector<BivarPoly> entries_;
};

/// The four matrix families whose determinant or permanent is F_{p,n+1}.
enum class MatrixKind { W, M, H, K };

inline const char* kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::W: return "W";
    case MatrixKind::M: return "M";
    case MatrixKind::H: return "H";
    case MatrixKind::K: return "K";
  }
  return "?";
}

namespace detail {

inline HessenbergMatrix build_banded(int p, int n, const BivarPoly& super, const BivarPoly& sub,
                                     const char* what) {
  if (p < 1) throw std::invalid_argument(std::string(what) + ": p must be >= 1");
  if (n < 1) throw std::invalid_argument(std::string(what) + ": order must be >= 1");
  const auto order = static_cast<std::size_t>(n);
  const auto band = static_cast<std::size_t>(p);
  HessenbergMatrix m(order, band);
  const BivarPoly x = BivarPoly::x();
  for (std::size_t r = 0; r < order; ++r) {
    m(r, r) = x;
    if (r + 1 < order) m(r, r + 1) = super;
    if (r >= band) m(r, r - band) = sub;
  }
  return m;
}

}  // namespace detail

/// x on the diagonal, i above it, i^p*y at offset p below.
inline HessenbergMatrix build_W(int p, int n) {
  return detail::build_banded(p, n, BivarPoly(GaussianInt::unit()),
                              BivarPoly::y().scaled(i_pow(static_cast<std::uint64_t>(std::max(p, 0)))), "build_W");
}

/// x on the diagonal, -1 above it, y at offset p below.
inline HessenbergMatrix build_M(int p, int n) {
  return detail::build_banded(p, n, BivarPoly(-1), BivarPoly::y(), "build_M");
}

/// x on the diagonal, -i above it, i^p*y at offset p below.
inline HessenbergMatrix build_H(int p, int n) {
  return detail::build_banded(p, n, BivarPoly(-GaussianInt::unit()),
                              BivarPoly::y().scaled(i_pow(static_cast<std::uint64_t>(std::max(p, 0)))), "build_H");
}

/// x on the diagonal, 1 above it, y at offset p below.
inline HessenbergMatrix build_K(int p, int n) {
  return detail::build_banded(p, n, BivarPoly(1), BivarPoly::y(), "build_K");
}

inline HessenbergMatrix build(MatrixKind kind, int p, int n) {
  switch (kind) {
    case MatrixKind::W: return build_W(p, n);
    case MatrixKind::M: return build_M(p, n);
    case MatrixKind::H: return build_H(p, n);
    case MatrixKind::K: return build_K(p, n);
  }
  throw std::invalid_argument("unknown matrix kind");
}

}  // namespace fibhess

#endif  // FIBHESS_HESSENBERG_HPP
