#ifndef FIBHESS_GAUSSIAN_INT_HPP
#define FIBHESS_GAUSSIAN_INT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

namespace fibhess {

using BigInt = boost::multiprecision::cpp_int;

/// Exact complex integer re + im*i with arbitrary-precision parts.
class GaussianInt {
 public:
  GaussianInt() = default;
  GaussianInt(BigInt re, BigInt im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianInt(int re) : re_(re) {}
  GaussianInt(long long re) : re_(re) {}

  static GaussianInt unit() { return GaussianInt(0, 1); }

  const BigInt& re() const noexcept { return re_; }
  const BigInt& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }
  bool is_one() const noexcept { return re_ == 1 && im_.is_zero(); }

  GaussianInt conj() const { return GaussianInt(re_, -im_); }

  GaussianInt operator-() const { return GaussianInt(-re_, -im_); }

  GaussianInt& operator+=(const GaussianInt& b) {
    re_ += b.re_;
    im_ += b.im_;
    return *this;
  }
  GaussianInt& operator-=(const GaussianInt& b) {
    re_ -= b.re_;
    im_ -= b.im_;
    return *this;
  }
  GaussianInt& operator*=(const GaussianInt& b) {
    // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
    BigInt re = re_ * b.re_ - im_ * b.im_;
    BigInt im = re_ * b.im_ + im_ * b.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }

  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Renders as `a`, `bi`, `-bi`, or `a+bi` / `a-bi`; unit imaginary parts
  /// print as `i` / `-i`.
  std::string to_string() const {
    if (im_.is_zero()) return re_.str();
    std::string imag;
    if (im_ == 1)
      imag = "i";
    else if (im_ == -1)
      imag = "-i";
    else
      imag = im_.str() + "i";
    if (re_.is_zero()) return imag;
    return re_.str() + (im_ > 0 ? "+" : "") + imag;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianInt& g) {
    return os << g.to_string();
  }

 private:
  BigInt re_ = 0;
  BigInt im_ = 0;
};

/// i^p for p >= 0; cycles 1, i, -1, -i.
inline GaussianInt i_pow(std::uint64_t p) {
  switch (p % 4) {
    case 0: return GaussianInt(1, 0);
    case 1: return GaussianInt(0, 1);
    case 2: return GaussianInt(-1, 0);
    default: return GaussianInt(0, -1);
  }
}

}  // namespace fibhess

#endif  // FIBHESS_GAUSSIAN_INT_HPP
