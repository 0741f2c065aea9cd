#pragma once

// Certified real roots of the Drinfeld polynomial.
//
// Exact certificates come first: distinctness from the integer resultant
// Res(P, P'), realness from a Sturm sequence over Q.  Numerical roots are then
// isolated by exact bisection and tightened by interval Newton.

#include <optional>
#include <span>
#include <vector>

#include "cpident/ball.hpp"
#include "cpident/drinfeld.hpp"

namespace cpident {

struct RootCertificate {
  /// Number of distinct real roots (Sturm count over the whole line).
  int real_count = 0;
  /// Res(P, P') != 0
  bool distinct = false;
  Integer resultant;
  Integer discriminant;
};

/// m_Q = 0 yields {0, true} with empty resultant data.
RootCertificate certify_roots(const DrinfeldData& dd);

struct RootSet {
  DrinfeldData drinfeld;
  int precision = 128;
  /// Distinct real roots, ascending.
  std::vector<RealBall> roots;
  std::vector<int> multiplicity;
  /// Set for roots found by the rational-root search.
  std::vector<std::optional<Rational>> exact;
  int real_count = 0;
  bool distinct = false;
  /// Real roots counted with multiplicity account for all m_Q roots.
  bool all_real = false;
  /// Every root ball reached radius <= 2^-precision.
  bool converged = false;
  std::vector<RealBall> B;
};

/// Isolates and refines all real roots to radius <= 2^-precision_bits and
/// fills in B_k.  Throws std::invalid_argument for precision_bits < 32.
RootSet isolate_and_refine(const DrinfeldData& dd, int precision_bits);

/// B_k = z_k (Lambda_{m_Q})^2 prod_{l != k} (z_k - z_l)^2, with every root
/// repeated by its multiplicity (so B_k = 0 at a multiple root).
std::vector<RealBall> compute_B(const RootSet& rs);

/// Resultant of two integer polynomials (ascending coefficients), by
/// fraction-free elimination on the Sylvester matrix.
Integer resultant(std::span<const Integer> a, std::span<const Integer> b);

/// Number of distinct real roots of an integer polynomial in (lo, hi]
/// (Sturm); endpoints must not be roots.
int sturm_count(std::span<const Integer> p, const Rational& lo, const Rational& hi);

}  // namespace cpident
