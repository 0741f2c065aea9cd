#pragma once

// The Drinfeld polynomial P_Q(z) = sum_m c_{mN+Q} z^m.

#include <vector>

#include "cpident/cycpoly.hpp"
#include "cpident/cyclotomic.hpp"

namespace cpident {

struct DrinfeldData {
  int n = 2;
  int length = 1;
  int q = 0;
  /// m_Q
  int degree = 0;
  /// Lambda^Q_0 .. Lambda^Q_{m_Q}
  std::vector<Integer> lambda;

  /// Lambda^Q_m, zero outside [0, m_Q].
  Integer coeff(int m) const;
  Integer value_at(const Integer& z) const;
};

/// m_Q = floor(((N-1)L - Q) / N).
int drinfeld_degree(int n, int length, int q);

/// Coefficients from c_m, cross-checked against the root-of-unity average
/// N^-1 t^-Q sum_a omega^-Qa (1-t^N)^L / (1-omega^a t)^L evaluated exactly.
/// Throws std::invalid_argument for Q outside [0, N-1], std::logic_error if
/// the two routes disagree.
DrinfeldData drinfeld(int n, int length, int q);

/// The root-of-unity average route alone, as a polynomial in z.
CycPoly drinfeld_by_root_average(int n, int length, int q);

}  // namespace cpident
