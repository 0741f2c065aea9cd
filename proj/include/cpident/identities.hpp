#pragma once

// The sums I_m / Ibar_m, the I / Ibar relations, the Theta tensor, and the
// orthogonality (Gram) and corollary checks at certified roots.

#include <span>
#include <string>
#include <vector>

#include "cpident/ball.hpp"
#include "cpident/drinfeld.hpp"
#include "cpident/kernels.hpp"
#include "cpident/polyform.hpp"
#include "cpident/roots.hpp"

namespace cpident {

/// I_m({mu};{lambda}) (plain) or Ibar_m({lambda};{mu}) (bar) by direct
/// enumeration.  mu and lambda are always passed in that order.  Zero for
/// m < 0 or m > (N-1)L.  Throws std::invalid_argument on bad parts or
/// mismatched lengths.
CycNum I_sum(const CycField& field, std::span<const int> mu, std::span<const int> lambda, int m,
             Variant variant, const kernels::KernelSet& k = kernels::active());

struct IdentityCheck {
  std::string name;
  /// Index of the instance, e.g. k for the I_kN family; -1 when unused.
  int index = -1;
  bool holds = false;
};

struct Lemma1Report {
  int ell = 0;
  int n = 0;
  int q = 0;
  std::vector<IdentityCheck> checks;

  bool ok() const;
};

/// Sum(mu) = ell N + Q, Sum(lambda) = n N + Q.  Checks I_kN = C(ell, k) for
/// every k <= ell when n = 0, and the three I / Ibar relations at t^N,
/// t^(ell N) and t^(ell N - N).  Throws std::invalid_argument when the sums
/// are not congruent mod N or ell < n.
Lemma1Report check_lemma1(const CycField& field, std::span<const int> mu, std::span<const int> lambda);

struct GeneratingFunctionReport {
  /// coefficient of t^m in prod J_j == (-1)^m zeta^(m^2) I_m for every m
  bool plain = false;
  /// the same for prod Jbar_j and Ibar_m
  bool bar = false;
  bool ok() const noexcept { return plain && bar; }
};

GeneratingFunctionReport check_generating_function(const CycField& field, std::span<const int> mu,
                                                   std::span<const int> lambda);

/// KTables of every composition of kN into L parts, in lexicographic order.
struct KCache {
  int n = 2;
  int length = 1;
  int k = 1;
  std::vector<KTable> tables;

  /// threads <= 1 builds serially; the result never depends on threads.
  static KCache build(int n, int length, int k, int threads = 1);
};

/// Theta_{ell,m,k} = sum_c Kbar_{ell N + Q}(c) K_{m N + Q}(c).  Throws
/// std::logic_error if the sum is not a rational integer.
Integer theta(const KCache& cache, int q, int ell, int m);

struct ThetaTensor {
  int n = 2;
  int length = 1;
  int q = 0;
  int k = 1;
  /// entries[ell][m] for ell, m in [0, m_Q]
  std::vector<std::vector<Integer>> entries;
};

ThetaTensor theta_tensor(const KCache& cache, int q);

/// C(ell + k, k) Lambda_0 Lambda_(ell + k)
Integer theta_closed_m0(const DrinfeldData& dd, int ell, int k);
/// sum_{j=0}^{m} (ell + 1 + m - 2j) Lambda_j Lambda_(ell + 1 + m - j)
Integer theta_closed_k1(const DrinfeldData& dd, int ell, int m);
/// The same sum written over n = m - j:
/// sum_{n=0}^{m} (ell + 1 + 2n - m) Lambda_(m - n) Lambda_(ell + 1 + n)
Integer theta_closed_k1_alt(const DrinfeldData& dd, int ell, int m);

struct Lemma2Report {
  int n = 2;
  int length = 1;
  int q = 0;
  int degree = 0;
  int m0_checked = 0;
  int m0_failed = 0;
  int k1_checked = 0;
  int k1_failed = 0;
  bool alt_form_agrees = false;
  bool symmetric = false;
  /// Description of the first failing instance, empty when none.
  std::string first_failure;

  bool ok() const noexcept { return m0_failed == 0 && k1_failed == 0 && alt_form_agrees && symmetric; }
};

/// Theta_{ell,0,k} for k in {1, 2} and Theta_{ell,m,1} for all ell, m in
/// [0, m_Q], against the closed forms.
Lemma2Report check_lemma2(const KCache& k1, const KCache& k2, const DrinfeldData& dd);
Lemma2Report check_lemma2(int n, int length, int q, int threads = 1);

struct GramReport {
  int q = 0;
  int precision = 128;
  std::vector<RealBall> roots;
  std::vector<RealBall> B;
  /// sum_c Gbar(c, z_i) G(c, z_k)
  std::vector<std::vector<ComplexBall>> matrix;
  /// sum_{ell,m} z_i^ell z_k^m Theta_{ell,m,1}
  std::vector<std::vector<RealBall>> theta_matrix;
  bool offdiag_contains_zero = false;
  bool diag_contains_expected = false;
  bool routes_agree = false;
  /// every radius below 1e-30 (1 + |B_k|)
  bool radius_ok = false;
  /// Residuals could not be separated from the tolerance at this precision.
  bool precision_insufficient = false;
  bool all_real = false;
  /// Some root is repeated; those columns are checked against B_k = 0.
  bool multiple_root_path = false;
  /// max over off-diagonal entries of |h_ik|
  double max_offdiag = 0.0;
  /// max over k of |h_kk + B_k| / (1 + |B_k|)
  double max_diag_rel = 0.0;

  bool ok() const noexcept {
    return all_real && offdiag_contains_zero && diag_contains_expected && routes_agree && radius_ok;
  }
};

GramReport gram_matrix(const KCache& k1, const DrinfeldData& dd, const RootSet& roots, int threads = 1);

struct CorollaryReport {
  int q = 0;
  int precision = 128;
  /// Skipped because the roots are not distinct.
  bool skipped = false;
  /// max_k max_m |h_k[m] + B_k f_k[m]| / max_m |B_k f_k[m]|
  double max_rel_error = 0.0;
  bool coefficients_match = false;
  /// Imaginary parts of the composition-route coefficients contain 0.
  bool real_within_radii = false;
  /// hbar_k overlaps h_k coefficientwise.
  bool bar_equals = false;

  bool ok() const noexcept { return skipped || (coefficients_match && real_within_radii && bar_equals); }
};

inline constexpr double kCorollaryTolerance = 1e-25;

CorollaryReport check_corollary(const KCache& k1, const DrinfeldData& dd, const RootSet& roots,
                                int threads = 1);

}  // namespace cpident
