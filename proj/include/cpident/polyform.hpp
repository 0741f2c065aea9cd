#pragma once

// The sums K_m, Kbar_m over bounded compositions, two ways: direct L-fold
// enumeration and coefficient extraction from the generating function g(t).

#include <vector>

#include "cpident/ball.hpp"
#include "cpident/compositions.hpp"
#include "cpident/cycpoly.hpp"
#include "cpident/kernels.hpp"
#include "cpident/roots.hpp"

namespace cpident {

enum class Variant { plain, bar };

/// Direct enumeration of K_m (or Kbar_m) over {n'} with sum m.
/// m outside [0, (N-1)L] gives zero.
CycNum K_brute(const Composition& c, int m, Variant variant,
               const kernels::KernelSet& k = kernels::active());

/// K_m for every m in [0, (N-1)L] from a single enumeration.
std::vector<CycNum> K_brute_all(const Composition& c, Variant variant,
                                const kernels::KernelSet& k = kernels::active());

/// g(t) = (1-t^N)^(L-k) / prod_j (1 - t omega^(N_j)) by exact division.
/// Throws std::invalid_argument unless the total is a multiple of N, and
/// std::logic_error on a nonzero remainder.
CycPoly gen_g(const Composition& c);

/// gbar(t) from its own closed form, with omega^(Nbar_j) in the denominator.
CycPoly gen_gbar_closed(const Composition& c);

struct KTable {
  Composition composition;
  int k = 0;
  /// K_m and Kbar_m for 0 <= m <= (N-1)L - kN.
  std::vector<CycNum> K;
  std::vector<CycNum> Kbar;

  /// Zero outside the stored range.
  CycNum at(int m, Variant variant) const;
};

/// Coefficients of g and of its conjugate.  Errors as gen_g.
KTable K_via_g(const Composition& c);

/// G_Q = sum_m K_{mN+Q} z^m (Gbar_Q from Kbar).
CycPoly G_poly(const KTable& table, int q, Variant variant);
CycPoly G_poly(const Composition& c, int q, Variant variant);

/// Coefficients (ascending) of the Lagrange basis polynomial
/// f_k(z) = prod_{l != k} (z - z_l) / (z_k - z_l).
/// Throws std::invalid_argument when the roots are not certified distinct
/// or k is out of range.
std::vector<RealBall> interp_f(const RootSet& roots, std::size_t k);

/// Horner evaluation of a real ball polynomial.
RealBall eval_real(const std::vector<RealBall>& coeffs, const RealBall& x);

}  // namespace cpident
