#include "cpident/qseries.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cpident {

CycNum bracket(const CycField& field, int n) {
  if (n < 0) throw std::invalid_argument("bracket: n must be nonnegative");
  CycNum sum(field);
  for (int i = 0; i < n; ++i) sum += CycNum::omega_power(field, i);
  return sum;
}

CycNum pochhammer(const CycNum& x, int s) {
  if (s < 0) throw std::invalid_argument("pochhammer: negative length");
  const CycField& f = x.field();
  CycNum prod(f, 1);
  for (int j = 1; j <= s; ++j) prod *= CycNum(f, 1) - x.mul_zeta_power(2L * (j - 1));
  return prod;
}

CycPoly pochhammer(const CycPoly& x, int s) {
  if (s < 0) throw std::invalid_argument("pochhammer: negative length");
  const CycField& f = x.field();
  const CycPoly one = CycPoly::constant(CycNum(f, 1), x.var());
  CycPoly prod = one;
  for (int j = 1; j <= s; ++j) prod *= one - x * CycNum::omega_power(f, j - 1);
  return prod;
}

CycNum q_binomial(const CycField& field, int n, int r) {
  const int big_n = field.n();
  if (r < 0 || r > big_n - 1) {
    throw std::invalid_argument("q_binomial: r must lie in [0, N-1]");
  }
  if (n < 0 || n > 2 * big_n - 2) {
    throw std::invalid_argument("q_binomial: n must lie in [0, 2N-2]");
  }
  const CycNum num = pochhammer(CycNum::omega_power(field, 1 + n - r), r);
  const CycNum den = pochhammer(CycNum::omega_power(field, 1), r);
  return num / den;
}

std::vector<Integer> gaussian_polynomial(int n, int r) {
  if (n < 0 || r < 0 || r > n) return {};
  // row[k] = [m over k]_q, advanced one m at a time
  std::vector<std::vector<Integer>> row(static_cast<std::size_t>(r) + 1);
  row[0] = {Integer(1)};
  for (int m = 1; m <= n; ++m) {
    for (int k = std::min(m, r); k >= 1; --k) {
      // [m over k] = [m-1 over k-1] + q^k [m-1 over k]
      std::vector<Integer> next = row[static_cast<std::size_t>(k) - 1];
      const auto& prev = row[static_cast<std::size_t>(k)];
      if (!prev.empty()) {
        const std::size_t len = prev.size() + static_cast<std::size_t>(k);
        if (next.size() < len) next.resize(len);
        for (std::size_t i = 0; i < prev.size(); ++i) next[i + static_cast<std::size_t>(k)] += prev[i];
      }
      row[static_cast<std::size_t>(k)] = std::move(next);
    }
  }
  return row[static_cast<std::size_t>(r)];
}

const QBinomialTable& QBinomialTable::of(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<QBinomialTable>> cache;
  const CycField& field = CycField::of(n);
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot.reset(new QBinomialTable(field));
  return *slot;
}

QBinomialTable::QBinomialTable(const CycField& field) : field_(&field) {
  const int big_n = field.n();
  const int m = field.order();
  for (int n = 0; n <= max_n(); ++n) bracket_.push_back(cpident::bracket(field, n));
  for (int n = 0; n <= max_n(); ++n) {
    for (int r = 0; r < big_n; ++r) {
      binom_.push_back(q_binomial(field, n, r));
      std::vector<std::int64_t> cyc(static_cast<std::size_t>(m), 0);
      const auto g = gaussian_polynomial(n, r);
      for (std::size_t e = 0; e < g.size(); ++e) {
        cyc[(2 * e) % static_cast<std::size_t>(m)] += g[e].get_si();
      }
      cyclic_.push_back(std::move(cyc));
    }
  }
  CycNum qfact(field, 1);
  for (int n = 0; n < big_n; ++n) {
    if (n > 0) qfact *= CycNum(field, 1) - CycNum::omega_power(field, n);
    inv_qfact_.push_back(qfact.inverse());
  }
}

std::size_t QBinomialTable::index(int n, int r) const {
  if (n < 0 || n > max_n() || r < 0 || r >= field_->n()) {
    throw std::out_of_range("QBinomialTable: index out of range");
  }
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(field_->n()) +
         static_cast<std::size_t>(r);
}

const CycNum& QBinomialTable::bracket(int n) const {
  return bracket_.at(static_cast<std::size_t>(n));
}

const CycNum& QBinomialTable::binom(int n, int r) const { return binom_[index(n, r)]; }

std::span<const std::int64_t> QBinomialTable::binom_cyclic(int n, int r) const {
  return cyclic_[index(n, r)];
}

const CycNum& QBinomialTable::inverse_qfactorial(int n) const {
  return inv_qfact_.at(static_cast<std::size_t>(n));
}

bool check_id1(const CycField& field, int n, int r) {
  const int big_n = field.n();
  if (n < 0 || n > big_n - 1 || r < 0 || r > big_n - 1) {
    throw std::invalid_argument("check_id1: n and r must lie in [0, N-1]");
  }
  const auto& table = QBinomialTable::of(big_n);
  const CycNum lhs = table.binom(n + r, r);
  const long exponent = static_cast<long>(n) * r + static_cast<long>(r) * (r + 1) / 2;
  CycNum rhs = table.binom(big_n - 1 - n, r) * CycNum::omega_power(field, exponent);
  if (r % 2 == 1) rhs = -rhs;
  return lhs == rhs;
}

namespace {

// sum_r [s over r] (-1)^r omega^(r(r-1)/2) x^r with x the polynomial t.
CycPoly id1a_sum(const CycField& field, int s) {
  const auto& table = QBinomialTable::of(field.n());
  std::vector<CycNum> coeffs;
  for (int r = 0; r <= s; ++r) {
    CycNum c = table.binom(s, r) * CycNum::omega_power(field, static_cast<long>(r) * (r - 1) / 2);
    if (r % 2 == 1) c = -c;
    coeffs.push_back(std::move(c));
  }
  return CycPoly(field, std::move(coeffs));
}

}  // namespace

bool check_id1a(const CycField& field, int s) {
  if (s < 0 || s > field.n() - 1) throw std::invalid_argument("check_id1a: s must lie in [0, N-1]");
  const CycPoly t = CycPoly::monomial(CycNum(field, 1), 1);
  return id1a_sum(field, s) == pochhammer(t, s);
}

bool check_id1a(const CycField& field, int s, const CycNum& x) {
  if (s < 0 || s > field.n() - 1) throw std::invalid_argument("check_id1a: s must lie in [0, N-1]");
  return id1a_sum(field, s).eval(x) == pochhammer(x, s);
}

namespace {

// sum_{n=0}^{top} (u;omega)_n (v;omega)_n / (omega;omega)_n^2 * (zeta^shift t)^n
CycPoly terminating_2phi1(const CycField& field, long u_exp, long v_exp, int top, long zeta_shift) {
  const auto& table = QBinomialTable::of(field.n());
  const CycNum one(field, 1);
  std::vector<CycNum> coeffs;
  CycNum pu = one, pv = one;
  for (int n = 0; n <= top; ++n) {
    if (n > 0) {
      pu *= one - CycNum::omega_power(field, u_exp + n - 1);
      pv *= one - CycNum::omega_power(field, v_exp + n - 1);
    }
    const CycNum& inv = table.inverse_qfactorial(n);
    coeffs.push_back((pu * pv * inv * inv).mul_zeta_power(zeta_shift * n));
  }
  return CycPoly(field, std::move(coeffs));
}

void check_site(const CycField& field, const SiteParams& site) {
  if (site.mu < 0 || site.mu > field.n() - 1 || site.lambda < 0 || site.lambda > field.n() - 1) {
    throw std::invalid_argument("J polynomials: mu_j and lambda_j must lie in [0, N-1]");
  }
  if (site.a < 0 || site.bbar < 0) {
    throw std::invalid_argument("J polynomials: a_j and bbar_j must be nonnegative");
  }
}

}  // namespace

CycPoly eval_J(const CycField& field, const SiteParams& site) {
  check_site(field, site);
  return terminating_2phi1(field, -site.mu, 1 + site.lambda, site.mu,
                           1 + 2 * (site.mu + site.a + site.bbar));
}

CycPoly eval_Jbar(const CycField& field, const SiteParams& site) {
  check_site(field, site);
  return terminating_2phi1(field, 1 + site.mu, -site.lambda, site.lambda,
                           1 + 2 * (site.lambda + site.a + site.bbar));
}

std::vector<SiteParams> site_params(std::span<const int> mu, std::span<const int> lambda) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("site_params: length mismatch");
  const std::size_t len = mu.size();
  std::vector<SiteParams> sites(len);
  long a = 0;
  for (std::size_t j = 0; j < len; ++j) {
    sites[j].mu = mu[j];
    sites[j].lambda = lambda[j];
    sites[j].a = a;
    a += mu[j];
  }
  long bbar = 0;
  for (std::size_t j = len; j-- > 0;) {
    sites[j].bbar = bbar;
    bbar += lambda[j];
  }
  return sites;
}

ProductIdentityReport check_product_identity(const CycField& field, std::span<const int> mu,
                                             std::span<const int> lambda) {
  const int big_n = field.n();
  if (mu.empty() || mu.size() != lambda.size()) {
    throw std::invalid_argument("check_product_identity: mu and lambda need equal nonzero length");
  }
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (mu[j] < 0 || mu[j] >= big_n || lambda[j] < 0 || lambda[j] >= big_n) {
      throw std::invalid_argument("check_product_identity: parts must lie in [0, N-1]");
    }
  }
  const int sum_mu = std::accumulate(mu.begin(), mu.end(), 0);
  const int sum_lambda = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (sum_mu % big_n != sum_lambda % big_n) {
    throw std::invalid_argument("check_product_identity: sums are not congruent mod N");
  }
  ProductIdentityReport report;
  report.q = sum_mu % big_n;
  report.ell = sum_mu / big_n;
  report.n = sum_lambda / big_n;
  if (report.ell < report.n) throw std::invalid_argument("check_product_identity: requires ell >= n");

  const auto sites = site_params(mu, lambda);
  const CycNum one(field, 1);
  CycPoly lhs = CycPoly::constant(one);
  CycPoly rhs_j = CycPoly::constant(one);
  for (const auto& s : sites) {
    lhs *= eval_J(field, s);
    rhs_j *= eval_Jbar(field, s);
  }
  const int power = report.ell - report.n;
  const CycPoly one_plus_tn = CycPoly::constant(one) + CycPoly::monomial(one, big_n);
  const CycPoly prefactor = one_plus_tn.pow(static_cast<unsigned>(power));
  const CycPoly rhs = prefactor * rhs_j;

  report.degrees_consistent = sum_mu == power * big_n + sum_lambda && lhs.degree() <= sum_mu &&
                              rhs_j.degree() <= sum_lambda;

  // lambda_j + a_j + bbar_j advances by mu_j - lambda_j per site, starting at bbar_0.
  bool telescoping = sites.front().lambda + sites.front().a + sites.front().bbar == sum_lambda;
  for (std::size_t j = 0; j + 1 < sites.size(); ++j) {
    const long cur = sites[j].lambda + sites[j].a + sites[j].bbar;
    const long next = sites[j + 1].lambda + sites[j + 1].a + sites[j + 1].bbar;
    telescoping = telescoping && next - cur == sites[j].mu - sites[j].lambda;
  }
  const CycPoly x = CycPoly::monomial(CycNum::zeta_power(field, 1 + 2L * sum_lambda), 1);
  telescoping = telescoping && pochhammer(x, sum_mu - sum_lambda) == prefactor;
  report.telescoping = telescoping;

  report.holds = lhs == rhs;
  return report;
}

}  // namespace cpident
