#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta), zeta = exp(i*pi/N).
//
// omega = zeta^2 is the primitive N-th root of unity of the q-series layer.
// Working one ring up (order 2N instead of N) keeps every half-integer
// power omega^(1/2 + k) exact.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cpident {

using Integer = mpz_class;
using Rational = mpq_class;

class ComplexBall;

/// Coefficients of the m-th cyclotomic polynomial, ascending degree.
std::vector<long> cyclotomic_polynomial(int m);

/// Euler's totient.
int euler_phi(int m);

/// Q(zeta) for a fixed N.  Instances are interned: obtain them through of().
class CycField {
 public:
  /// Shared immutable instance.  Throws std::invalid_argument when n < 2.
  static const CycField& of(int n);

  CycField(const CycField&) = delete;
  CycField& operator=(const CycField&) = delete;

  int n() const noexcept { return n_; }
  /// Ring order M = 2N.
  int order() const noexcept { return 2 * n_; }
  /// phi(M), the dimension of the field over Q.
  int degree() const noexcept { return static_cast<int>(phi_.size()) - 1; }
  /// Phi_M, monic, ascending.
  std::span<const long> phi() const noexcept { return phi_; }
  /// Canonical integer coordinates of zeta^k for 0 <= k < M.
  std::span<const long> power(int k) const { return powers_.at(static_cast<std::size_t>(k)); }
  /// Units mod M other than 1: the non-trivial Galois automorphisms.
  std::span<const int> galois_units() const noexcept { return units_; }

 private:
  explicit CycField(int n);

  int n_;
  std::vector<long> phi_;
  std::vector<std::vector<long>> powers_;
  std::vector<int> units_;
};

/// An element of Q(zeta) in canonical form: sum coeffs[i] zeta^i, i < phi(M).
class CycNum {
 public:
  /// Zero of the given field.
  explicit CycNum(const CycField& field);
  CycNum(const CycField& field, const Rational& value);
  CycNum(const CycField& field, long value) : CycNum(field, Rational(value)) {}

  /// zeta^k for any integer k (reduced mod 2N).
  static CycNum zeta_power(const CycField& field, long k);
  /// omega^k = zeta^(2k).
  static CycNum omega_power(const CycField& field, long k) { return zeta_power(field, 2 * k); }
  /// Image of sum v[i] x^i in Z[x]/(x^M - 1) under x -> zeta.  v.size() must equal M.
  static CycNum from_cyclic(const CycField& field, std::span<const std::int64_t> v);
  /// Canonical form of an arbitrary coefficient vector in powers of zeta.
  static CycNum from_coefficients(const CycField& field, std::vector<Rational> coeffs);

  const CycField& field() const noexcept { return *field_; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// The rational value when no irrational component is present.
  std::optional<Rational> to_rational() const;

  /// zeta -> zeta^(M-1), i.e. omega -> omega^-1: complex conjugation.
  CycNum conjugate() const;
  /// zeta -> zeta^k, k a unit mod M.
  CycNum galois(int k) const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  CycNum inverse() const;
  /// this * zeta^k, without a general multiplication.
  CycNum mul_zeta_power(long k) const;

  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  CycNum& operator*=(const Rational& rhs);
  CycNum& operator/=(const CycNum& rhs) { return *this *= rhs.inverse(); }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator*(CycNum a, const Rational& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  CycNum operator-() const;

  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Human-readable form in powers of z = zeta, e.g. "1 - 2*z + z^3".
  std::string to_string() const;

 private:
  void check_same_field(const CycNum& other) const;

  const CycField* field_;
  std::vector<Rational> coeffs_;
};

/// Rigorous enclosure of the image of a under zeta -> exp(i*pi/N).
/// Throws std::invalid_argument when precision_bits < 32.
ComplexBall complex_embed(const CycNum& a, int precision_bits);

}  // namespace cpident
