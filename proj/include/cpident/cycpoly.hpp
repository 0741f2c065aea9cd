#pragma once

// Dense univariate polynomials over Q(zeta).

#include <span>
#include <string>
#include <vector>

#include "cpident/ball.hpp"
#include "cpident/cyclotomic.hpp"

namespace cpident {

enum class Indeterminate { t, z };

class CycPoly {
 public:
  explicit CycPoly(const CycField& field, Indeterminate var = Indeterminate::t);
  CycPoly(const CycField& field, std::vector<CycNum> coeffs, Indeterminate var = Indeterminate::t);

  static CycPoly constant(const CycNum& c, Indeterminate var = Indeterminate::t);
  /// c * var^degree
  static CycPoly monomial(const CycNum& c, int degree, Indeterminate var = Indeterminate::t);
  static CycPoly from_integers(const CycField& field, std::span<const Integer> coeffs,
                               Indeterminate var = Indeterminate::t);

  const CycField& field() const noexcept { return *field_; }
  Indeterminate var() const noexcept { return var_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const CycNum> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of var^i; zero outside [0, degree].
  CycNum coeff(int i) const;

  CycPoly conjugate() const;
  /// p(c * var)
  CycPoly scale_argument(const CycNum& c) const;
  CycNum eval(const CycNum& x) const;
  /// Horner evaluation of the embedded coefficients at a real ball.
  ComplexBall eval(const RealBall& x) const;
  CycPoly with_var(Indeterminate var) const;

  CycPoly& operator+=(const CycPoly& rhs);
  CycPoly& operator-=(const CycPoly& rhs);
  CycPoly& operator*=(const CycPoly& rhs) { return *this = *this * rhs; }
  CycPoly& operator*=(const CycNum& rhs);

  friend CycPoly operator+(CycPoly a, const CycPoly& b) { return a += b; }
  friend CycPoly operator-(CycPoly a, const CycPoly& b) { return a -= b; }
  friend CycPoly operator*(const CycPoly& a, const CycPoly& b);
  friend CycPoly operator*(CycPoly a, const CycNum& b) { return a *= b; }
  CycPoly operator-() const;
  CycPoly pow(unsigned e) const;

  struct DivMod;
  /// Euclidean division; throws std::domain_error for a zero divisor.
  DivMod divmod(const CycPoly& divisor) const;

  friend bool operator==(const CycPoly& a, const CycPoly& b);

  std::string to_string() const;

 private:
  void trim();
  void check_compatible(const CycPoly& other) const;

  const CycField* field_;
  Indeterminate var_;
  std::vector<CycNum> coeffs_;
};

struct CycPoly::DivMod {
  CycPoly quotient;
  CycPoly remainder;
};

}  // namespace cpident
