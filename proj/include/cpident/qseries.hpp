#pragma once

// omega-deformed integers, binomials and Pochhammer symbols at a root of
// unity, plus the terminating 2phi1 polynomials J_j and Jbar_j.

#include <cstdint>
#include <span>
#include <vector>

#include "cpident/cycpoly.hpp"
#include "cpident/cyclotomic.hpp"

namespace cpident {

/// [n] = 1 + omega + ... + omega^(n-1); zero for n = 0.
CycNum bracket(const CycField& field, int n);

/// (x; omega)_s = prod_{j=1..s} (1 - x omega^(j-1)); (x; omega)_0 = 1.
CycNum pochhammer(const CycNum& x, int s);
CycPoly pochhammer(const CycPoly& x, int s);

/// The omega-binomial via the Pochhammer ratio (omega^(1+n-r); omega)_r / (omega; omega)_r.
/// Requires 0 <= r <= N-1 and 0 <= n <= 2N-2; throws std::invalid_argument otherwise.
CycNum q_binomial(const CycField& field, int n, int r);

/// Gaussian polynomial [n over r]_q as integer coefficients in q (q-Pascal rule).
std::vector<Integer> gaussian_polynomial(int n, int r);

/// Tables of [n] and [n over r] for one field, built once and shared.
class QBinomialTable {
 public:
  static const QBinomialTable& of(int n);

  const CycField& field() const noexcept { return *field_; }
  int max_n() const noexcept { return 2 * field_->n() - 2; }
  const CycNum& bracket(int n) const;
  /// Zero for r > n.  Requires 0 <= n <= 2N-2, 0 <= r <= N-1.
  const CycNum& binom(int n, int r) const;
  /// The same binomial in Z[x]/(x^M - 1) (Gaussian polynomial with q -> x^2);
  /// nonnegative coefficients summing to the ordinary binomial C(n, r).
  std::span<const std::int64_t> binom_cyclic(int n, int r) const;
  /// 1 / (omega; omega)_n for 0 <= n <= N-1.
  const CycNum& inverse_qfactorial(int n) const;

 private:
  explicit QBinomialTable(const CycField& field);
  std::size_t index(int n, int r) const;

  const CycField* field_;
  std::vector<CycNum> bracket_;
  std::vector<CycNum> binom_;
  std::vector<std::vector<std::int64_t>> cyclic_;
  std::vector<CycNum> inv_qfact_;
};

/// [n+r over r] == (-1)^r omega^(nr + r(r+1)/2) [N-1-n over r], exactly.
bool check_id1(const CycField& field, int n, int r);
/// sum_r [s over r] (-1)^r omega^(r(r-1)/2) x^r == (x; omega)_s with x an indeterminate.
bool check_id1a(const CycField& field, int s);
/// The same identity at a concrete field element x.
bool check_id1a(const CycField& field, int s, const CycNum& x);

/// Per-site data of the J polynomials: mu_j, lambda_j, a_j (prefix sum of mu
/// before j) and bbar_j (suffix sum of lambda after j).
struct SiteParams {
  int mu = 0;
  int lambda = 0;
  long a = 0;
  long bbar = 0;
};

/// J_j(t) = sum_{n=0}^{mu} (omega^-mu;omega)_n (omega^(1+lambda);omega)_n / (omega;omega)_n^2
///          * (t omega^(1/2 + mu + a + bbar))^n
CycPoly eval_J(const CycField& field, const SiteParams& site);
/// Jbar_j(t): upper parameters omega^(1+mu), omega^-lambda; argument t omega^(1/2 + lambda + a + bbar).
CycPoly eval_Jbar(const CycField& field, const SiteParams& site);

/// Site data for whole vectors mu, lambda (same length, parts in [0, N-1]).
std::vector<SiteParams> site_params(std::span<const int> mu, std::span<const int> lambda);

struct ProductIdentityReport {
  int ell = 0;
  int n = 0;
  int q = 0;
  /// Sum(mu) == (ell - n) N + Sum(lambda) and both products respect it.
  bool degrees_consistent = false;
  /// The shifted-exponent telescoping and the collapsed prefactor
  /// (omega^(1/2 + bbar_0) t; omega)_((ell-n)N) == (1 + t^N)^(ell-n).
  bool telescoping = false;
  /// prod J_j == (1 + t^N)^(ell-n) prod Jbar_j coefficientwise.
  bool holds = false;

  bool ok() const noexcept { return degrees_consistent && telescoping && holds; }
};

/// Requires Sum(mu) = ell N + Q, Sum(lambda) = n N + Q, ell >= n, parts in
/// [0, N-1]; throws std::invalid_argument otherwise.
ProductIdentityReport check_product_identity(const CycField& field, std::span<const int> mu,
                                             std::span<const int> lambda);

}  // namespace cpident
