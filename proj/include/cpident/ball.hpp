#pragma once

// Midpoint-radius ("ball") arithmetic on top of MPFR.
//
// Every operation returns a ball guaranteed to contain the exact result of
// the same operation on any points of the input balls.  Midpoints are
// rounded to nearest at the ball's precision; radii carry 64 bits and are
// always rounded up.

#include <optional>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace cpident {

/// Owning RAII handle for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec = 64);
  Mpfr(const Mpfr& other);
  Mpfr(Mpfr&& other) noexcept;
  Mpfr& operator=(const Mpfr& other);
  Mpfr& operator=(Mpfr&& other) noexcept;
  ~Mpfr();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

 private:
  mpfr_t value_;
};

class RealBall {
 public:
  static constexpr mpfr_prec_t kRadiusPrecision = 64;

  explicit RealBall(int precision = 128);
  RealBall(const mpq_class& value, int precision);
  RealBall(long value, int precision);
  /// Smallest representable ball containing [lo, hi].
  static RealBall from_endpoints(const Mpfr& lo, const Mpfr& hi, int precision);
  /// Ball around an (exact) MPFR value with an explicit radius.
  static RealBall from_mid_rad(const Mpfr& mid, const Mpfr& rad, int precision);
  static RealBall pi(int precision);

  int precision() const noexcept { return static_cast<int>(mid_.precision()); }
  const Mpfr& mid() const noexcept { return mid_; }
  const Mpfr& rad() const noexcept { return rad_; }

  /// Rigorous lower / upper endpoints.
  Mpfr lower() const;
  Mpfr upper() const;
  /// Upper bound on |x|.
  Mpfr mag() const;

  bool contains_zero() const;
  bool contains(const mpq_class& value) const;
  bool overlaps(const RealBall& other) const;
  bool is_positive() const;
  bool is_negative() const;
  /// rad <= 2^exp2
  bool radius_at_most_pow2(long exp2) const;
  /// rad <= bound
  bool radius_at_most(const Mpfr& bound) const;
  std::optional<RealBall> intersect(const RealBall& other) const;

  double mid_double() const;
  double rad_double() const;
  /// Midpoint in scientific notation with the given number of significant digits.
  std::string mid_string(int digits) const;
  /// Radius with 3 significant digits (upward).
  std::string rad_string() const;

  RealBall operator-() const;
  friend RealBall operator+(const RealBall& a, const RealBall& b);
  friend RealBall operator-(const RealBall& a, const RealBall& b);
  friend RealBall operator*(const RealBall& a, const RealBall& b);
  /// Throws std::domain_error when b contains zero.
  friend RealBall operator/(const RealBall& a, const RealBall& b);
  RealBall& operator+=(const RealBall& b) { return *this = *this + b; }
  RealBall& operator-=(const RealBall& b) { return *this = *this - b; }
  RealBall& operator*=(const RealBall& b) { return *this = *this * b; }

  RealBall pow(unsigned e) const;
  RealBall cos() const;
  RealBall sin() const;
  /// Ball with the same midpoint and radius widened by `extra`.
  RealBall widened(const Mpfr& extra) const;

 private:
  Mpfr mid_;
  Mpfr rad_;
};

class ComplexBall {
 public:
  explicit ComplexBall(int precision = 128) : re_(precision), im_(precision) {}
  ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit ComplexBall(RealBall re) : re_(std::move(re)), im_(re_.precision()) {}

  const RealBall& real() const noexcept { return re_; }
  const RealBall& imag() const noexcept { return im_; }
  int precision() const noexcept { return re_.precision(); }

  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool overlaps(const ComplexBall& other) const {
    return re_.overlaps(other.re_) && im_.overlaps(other.im_);
  }
  /// Upper bound on |z| (via |re| + |im|).
  Mpfr mag() const;
  /// Upper bound on max(rad(re), rad(im)).
  Mpfr rad() const;

  ComplexBall conj() const { return {re_, -im_}; }
  ComplexBall operator-() const { return {-re_, -im_}; }
  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend ComplexBall operator*(const ComplexBall& a, const RealBall& b) {
    return {a.re_ * b, a.im_ * b};
  }
  ComplexBall& operator+=(const ComplexBall& b) { return *this = *this + b; }
  ComplexBall& operator*=(const ComplexBall& b) { return *this = *this * b; }

 private:
  RealBall re_;
  RealBall im_;
};

/// Upper bound on |a - b| over the two balls.
Mpfr distance_bound(const RealBall& a, const RealBall& b);
Mpfr distance_bound(const ComplexBall& a, const ComplexBall& b);

/// Decimal rendering of an MPFR value (upward for radii / bounds).
std::string to_decimal(const Mpfr& value, int digits);

}  // namespace cpident
