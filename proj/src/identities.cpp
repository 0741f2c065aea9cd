#include "cpident/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "cpident/cyclic_sum.hpp"
#include "cpident/parallel.hpp"
#include "cpident/qseries.hpp"

namespace cpident {

namespace {

void check_parts(const CycField& field, std::span<const int> mu, std::span<const int> lambda) {
  if (mu.size() != lambda.size() || mu.empty()) {
    throw std::invalid_argument("mu and lambda must be nonempty and of equal length");
  }
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (mu[j] < 0 || mu[j] >= field.n() || lambda[j] < 0 || lambda[j] >= field.n()) {
      throw std::invalid_argument("mu and lambda parts must lie in [0, N-1]");
    }
  }
}

// factor_j(n) = [top_j over n][n + low_j over n] in the group ring
std::vector<SiteFactors> i_sites(const CycField& field, std::span<const int> top, std::span<const int> low) {
  const auto& table = QBinomialTable::of(field.n());
  std::vector<SiteFactors> sites(top.size());
  for (std::size_t j = 0; j < top.size(); ++j) {
    for (int n = 0; n < field.n(); ++n) {
      if (table.binom(top[j], n).is_zero() || table.binom(n + low[j], n).is_zero()) {
        sites[j].by_value.emplace_back();
        continue;
      }
      sites[j].by_value.push_back(cyclic_multiply(table.binom_cyclic(top[j], n), table.binom_cyclic(n + low[j], n)));
    }
  }
  return sites;
}

std::vector<CycNum> i_sum_all_plain(const CycField& field, std::span<const int> mu, std::span<const int> lambda,
                                    const kernels::KernelSet& k) {
  const auto pm = prefix_data(mu);
  const auto pl = prefix_data(lambda);
  const auto sites = i_sites(field, mu, lambda);
  const auto sums = cyclic_sum_by_total(
      field.order(), std::span<const SiteFactors>(sites),
      [&](int j, int n, int prefix) {
        return 2L * n * (pm.before[static_cast<std::size_t>(j)] - prefix + pl.after[static_cast<std::size_t>(j)]);
      },
      k);
  std::vector<CycNum> out;
  for (const auto& s : sums) out.push_back(CycNum::from_cyclic(field, s));
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer as_integer(const CycNum& v, const char* what) {
  const auto r = v.to_rational();
  if (!r || r->get_den() != 1) throw std::logic_error(std::string(what) + ": value is not a rational integer");
  return r->get_num();
}

// Embeds Q(zeta) elements at a fixed precision from cached powers of zeta.
class Embedder {
 public:
  Embedder(const CycField& field, int prec) : prec_(prec) {
    for (int i = 0; i < field.degree(); ++i) powers_.push_back(complex_embed(CycNum::zeta_power(field, i), prec));
  }

  ComplexBall operator()(const CycNum& v) const {
    ComplexBall acc(prec_);
    const auto c = v.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (sgn(c[i]) == 0) continue;
      acc += powers_[i] * RealBall(c[i], prec_);
    }
    return acc;
  }

  ComplexBall eval(const CycPoly& p, const RealBall& x) const {
    ComplexBall acc(prec_);
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + (*this)(p.coeffs()[static_cast<std::size_t>(i)]);
    return acc;
  }

 private:
  int prec_;
  std::vector<ComplexBall> powers_;
};

double upper_double(const Mpfr& v) { return mpfr_get_d(v.get(), MPFR_RNDU); }

double abs_mid(const RealBall& b) { return std::fabs(b.mid_double()); }

// Chunks fixed independently of the thread count keep ball sums reproducible.
constexpr std::size_t kChunks = 64;

}  // namespace

CycNum I_sum(const CycField& field, std::span<const int> mu, std::span<const int> lambda, int m, Variant variant,
             const kernels::KernelSet& k) {
  check_parts(field, mu, lambda);
  const int len = static_cast<int>(mu.size());
  if (m < 0 || m > (field.n() - 1) * len) return CycNum(field);
  const auto pm = prefix_data(mu);
  const auto pl = prefix_data(lambda);
  std::vector<std::int64_t> sum;
  if (variant == Variant::plain) {
    const auto sites = i_sites(field, mu, lambda);
    sum = cyclic_sum_fixed_total(
        field.order(), std::span<const SiteFactors>(sites), m,
        [&](int j, int n, int prefix) {
          return 2L * n * (pm.before[static_cast<std::size_t>(j)] - prefix + pl.after[static_cast<std::size_t>(j)]);
        },
        k);
  } else {
    const auto sites = i_sites(field, lambda, mu);
    sum = cyclic_sum_fixed_total(
        field.order(), std::span<const SiteFactors>(sites), m,
        [&](int j, int n, int prefix) {
          const long after = m - prefix - n;
          return 2L * n * (pl.after[static_cast<std::size_t>(j)] - after + pm.before[static_cast<std::size_t>(j)]);
        },
        k);
  }
  return CycNum::from_cyclic(field, sum);
}

bool Lemma1Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

Lemma1Report check_lemma1(const CycField& field, std::span<const int> mu, std::span<const int> lambda) {
  check_parts(field, mu, lambda);
  const int big_n = field.n();
  long smu = 0, slam = 0;
  for (int v : mu) smu += v;
  for (int v : lambda) slam += v;
  if ((smu - slam) % big_n != 0) throw std::invalid_argument("check_lemma1: sums must be congruent mod N");
  Lemma1Report rep;
  rep.q = static_cast<int>(smu % big_n);
  rep.ell = static_cast<int>(smu / big_n);
  rep.n = static_cast<int>(slam / big_n);
  if (rep.ell < rep.n) throw std::invalid_argument("check_lemma1: requires ell >= n");

  const auto plain = i_sum_all_plain(field, mu, lambda, kernels::active());
  auto I = [&](long m) {
    if (m < 0 || m >= static_cast<long>(plain.size())) return CycNum(field);
    return plain[static_cast<std::size_t>(m)];
  };
  auto Ibar = [&](long m) { return I_sum(field, mu, lambda, static_cast<int>(m), Variant::bar); };
  const long ell = rep.ell, n = rep.n, nn = big_n;

  if (n == 0) {
    for (long k = 0; k <= ell; ++k) {
      rep.checks.push_back({"I_kN = C(ell,k)", static_cast<int>(k), I(k * nn) == CycNum(field, Rational(binomial(ell, k)))});
    }
  }
  const CycNum ibar_n = Ibar(n * nn);
  rep.checks.push_back({"I_N = (ell-n) + Ibar_N", -1, I(nn) == CycNum(field, ell - n) + Ibar(nn)});
  rep.checks.push_back({"I_ellN = Ibar_nN", -1, I(ell * nn) == ibar_n});
  rep.checks.push_back({"I_(ell-1)N = (ell-n) Ibar_nN + Ibar_(n-1)N", -1,
                        I((ell - 1) * nn) == ibar_n * Rational(ell - n) + Ibar((n - 1) * nn)});
  return rep;
}

GeneratingFunctionReport check_generating_function(const CycField& field, std::span<const int> mu,
                                                   std::span<const int> lambda) {
  check_parts(field, mu, lambda);
  const auto sites = site_params(mu, lambda);
  CycPoly pj = CycPoly::constant(CycNum(field, 1));
  CycPoly pjbar = pj;
  for (const auto& s : sites) {
    pj *= eval_J(field, s);
    pjbar *= eval_Jbar(field, s);
  }
  const int top = (field.n() - 1) * static_cast<int>(mu.size());
  const auto plain = i_sum_all_plain(field, mu, lambda, kernels::active());
  GeneratingFunctionReport rep{true, true};
  for (int m = 0; m <= top; ++m) {
    const CycNum sign = CycNum::zeta_power(field, static_cast<long>(m) * m) * Rational(m % 2 == 0 ? 1 : -1);
    if (!(pj.coeff(m) == sign * plain[static_cast<std::size_t>(m)])) rep.plain = false;
    if (!(pjbar.coeff(m) == sign * I_sum(field, mu, lambda, m, Variant::bar))) rep.bar = false;
  }
  if (pj.degree() > top || pjbar.degree() > top) rep.plain = rep.bar = false;
  return rep;
}

KCache KCache::build(int n, int length, int k, int threads) {
  KCache cache{n, length, k, {}};
  std::vector<Composition> comps;
  for (const auto& c : CompositionRange(length, n, k * n)) comps.push_back(c);
  std::vector<std::optional<KTable>> slots(comps.size());
  parallel_for(comps.size(), threads, [&](std::size_t i) { slots[i] = K_via_g(comps[i]); });
  cache.tables.reserve(slots.size());
  for (auto& s : slots) cache.tables.push_back(std::move(*s));
  return cache;
}

Integer theta(const KCache& cache, int q, int ell, int m) {
  const CycField& field = CycField::of(cache.n);
  CycNum sum(field);
  for (const auto& t : cache.tables) {
    const CycNum a = t.at(ell * cache.n + q, Variant::bar);
    if (a.is_zero()) continue;
    const CycNum b = t.at(m * cache.n + q, Variant::plain);
    if (b.is_zero()) continue;
    sum += a * b;
  }
  return as_integer(sum, "theta");
}

ThetaTensor theta_tensor(const KCache& cache, int q) {
  ThetaTensor tt{cache.n, cache.length, q, cache.k, {}};
  const int d = drinfeld_degree(cache.n, cache.length, q);
  tt.entries.assign(static_cast<std::size_t>(d) + 1, std::vector<Integer>(static_cast<std::size_t>(d) + 1));
  for (int ell = 0; ell <= d; ++ell) {
    for (int m = 0; m <= d; ++m) {
      tt.entries[static_cast<std::size_t>(ell)][static_cast<std::size_t>(m)] = theta(cache, q, ell, m);
    }
  }
  return tt;
}

Integer theta_closed_m0(const DrinfeldData& dd, int ell, int k) {
  return binomial(ell + k, k) * dd.coeff(0) * dd.coeff(ell + k);
}

Integer theta_closed_k1(const DrinfeldData& dd, int ell, int m) {
  Integer sum = 0;
  for (int j = 0; j <= m; ++j) sum += Integer(ell + 1 + m - 2 * j) * dd.coeff(j) * dd.coeff(ell + 1 + m - j);
  return sum;
}

Integer theta_closed_k1_alt(const DrinfeldData& dd, int ell, int m) {
  Integer sum = 0;
  for (int n = 0; n <= m; ++n) sum += Integer(ell + 1 + 2 * n - m) * dd.coeff(m - n) * dd.coeff(ell + 1 + n);
  return sum;
}

Lemma2Report check_lemma2(const KCache& k1, const KCache& k2, const DrinfeldData& dd) {
  Lemma2Report rep;
  rep.n = dd.n;
  rep.length = dd.length;
  rep.q = dd.q;
  rep.degree = dd.degree;
  rep.alt_form_agrees = true;
  rep.symmetric = true;
  const auto t1 = theta_tensor(k1, dd.q);
  const auto t2 = theta_tensor(k2, dd.q);
  auto fail = [&](const std::string& what) {
    if (rep.first_failure.empty()) rep.first_failure = what;
  };
  const int d = dd.degree;
  for (int ell = 0; ell <= d; ++ell) {
    for (int k = 1; k <= 2; ++k) {
      const auto& t = k == 1 ? t1 : t2;
      ++rep.m0_checked;
      const Integer want = theta_closed_m0(dd, ell, k);
      const Integer& got = t.entries[static_cast<std::size_t>(ell)][0];
      if (got != want) {
        ++rep.m0_failed;
        fail("m=0 ell=" + std::to_string(ell) + " k=" + std::to_string(k) + ": " + got.get_str() +
             " != " + want.get_str());
      }
    }
    for (int m = 0; m <= d; ++m) {
      ++rep.k1_checked;
      const Integer want = theta_closed_k1(dd, ell, m);
      const Integer& got = t1.entries[static_cast<std::size_t>(ell)][static_cast<std::size_t>(m)];
      if (got != want) {
        ++rep.k1_failed;
        fail("k=1 ell=" + std::to_string(ell) + " m=" + std::to_string(m) + ": " + got.get_str() +
             " != " + want.get_str());
      }
      if (theta_closed_k1_alt(dd, ell, m) != want) rep.alt_form_agrees = false;
      if (got != t1.entries[static_cast<std::size_t>(m)][static_cast<std::size_t>(ell)]) rep.symmetric = false;
    }
  }
  if (!rep.alt_form_agrees) fail("the two closed forms disagree");
  if (!rep.symmetric) fail("Theta_{ell,m,1} is not symmetric");
  return rep;
}

Lemma2Report check_lemma2(int n, int length, int q, int threads) {
  const auto dd = drinfeld(n, length, q);
  return check_lemma2(KCache::build(n, length, 1, threads), KCache::build(n, length, 2, threads), dd);
}

GramReport gram_matrix(const KCache& k1, const DrinfeldData& dd, const RootSet& roots, int threads) {
  GramReport rep;
  rep.q = dd.q;
  rep.precision = roots.precision;
  rep.roots = roots.roots;
  rep.B = roots.B;
  rep.all_real = roots.all_real;
  rep.multiple_root_path = std::any_of(roots.multiplicity.begin(), roots.multiplicity.end(), [](int m) { return m > 1; });
  const std::size_t r = roots.roots.size();
  if (r == 0) {
    rep.offdiag_contains_zero = rep.diag_contains_expected = rep.routes_agree = rep.radius_ok = true;
    return rep;
  }
  const int prec = roots.roots.front().precision();
  const CycField& field = CycField::of(dd.n);
  const Embedder embed(field, prec);

  using Matrix = std::vector<std::vector<ComplexBall>>;
  const Matrix zero(r, std::vector<ComplexBall>(r, ComplexBall(prec)));
  const std::size_t count = k1.tables.size();
  const std::size_t chunks = std::min(kChunks, std::max<std::size_t>(count, 1));
  std::vector<Matrix> partial(chunks, zero);
  parallel_for(chunks, threads, [&](std::size_t ch) {
    for (std::size_t c = ch * count / chunks; c < (ch + 1) * count / chunks; ++c) {
      const KTable& t = k1.tables[c];
      const CycPoly g = G_poly(t, dd.q, Variant::plain);
      const CycPoly gb = G_poly(t, dd.q, Variant::bar);
      std::vector<ComplexBall> gv, gbv;
      for (const auto& z : roots.roots) {
        gv.push_back(embed.eval(g, z));
        gbv.push_back(embed.eval(gb, z));
      }
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) partial[ch][i][k] += gbv[i] * gv[k];
      }
    }
  });
  rep.matrix = zero;
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) rep.matrix[i][k] += p[i][k];
    }
  }

  const auto tt = theta_tensor(k1, dd.q);
  const std::size_t d = tt.entries.size();
  std::vector<std::vector<RealBall>> zpow(r);
  for (std::size_t i = 0; i < r; ++i) {
    zpow[i].emplace_back(1L, prec);
    for (std::size_t e = 1; e < d; ++e) zpow[i].push_back(zpow[i].back() * roots.roots[i]);
  }
  rep.theta_matrix.assign(r, std::vector<RealBall>(r, RealBall(prec)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      RealBall acc(prec);
      for (std::size_t ell = 0; ell < d; ++ell) {
        for (std::size_t m = 0; m < d; ++m) {
          const Integer& th = tt.entries[ell][m];
          if (th == 0) continue;
          acc += zpow[i][ell] * zpow[k][m] * RealBall(Rational(th), prec);
        }
      }
      rep.theta_matrix[i][k] = std::move(acc);
    }
  }

  rep.offdiag_contains_zero = rep.diag_contains_expected = rep.routes_agree = rep.radius_ok = true;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      const ComplexBall& h = rep.matrix[i][k];
      const RealBall& ht = rep.theta_matrix[i][k];
      const double b_abs = upper_double(rep.B[k].mag());
      const double tol = 1e-30 * (1.0 + b_abs);
      if (upper_double(h.rad()) > tol || upper_double(ht.rad()) > tol) rep.radius_ok = false;
      if (!h.real().overlaps(ht) || !h.imag().contains_zero()) rep.routes_agree = false;
      if (i == k) {
        const RealBall expected = -rep.B[k];
        if (!h.real().overlaps(expected) || !h.imag().contains_zero() || !ht.overlaps(expected)) {
          rep.diag_contains_expected = false;
        }
        const double resid = std::fabs((h.real() - expected).mid_double());
        rep.max_diag_rel = std::max(rep.max_diag_rel, resid / (1.0 + b_abs));
      } else {
        if (!h.contains_zero() || !ht.contains_zero()) rep.offdiag_contains_zero = false;
        rep.max_offdiag = std::max(rep.max_offdiag, std::fabs(h.real().mid_double()));
      }
    }
  }
  rep.precision_insufficient = !rep.radius_ok;
  return rep;
}

CorollaryReport check_corollary(const KCache& k1, const DrinfeldData& dd, const RootSet& roots, int threads) {
  CorollaryReport rep;
  rep.q = dd.q;
  rep.precision = roots.precision;
  if (!roots.distinct) {
    rep.skipped = true;
    return rep;
  }
  const std::size_t r = roots.roots.size();
  rep.coefficients_match = rep.real_within_radii = rep.bar_equals = true;
  if (r == 0) return rep;
  const int prec = roots.roots.front().precision();
  const CycField& field = CycField::of(dd.n);
  const Embedder embed(field, prec);
  const auto tt = theta_tensor(k1, dd.q);
  const std::size_t d = tt.entries.size();

  // composition route: sum_c Gbar(c, z_k) K_{mN+Q}(c), and the barred partner
  const std::size_t count = k1.tables.size();
  const std::size_t chunks = std::min(kChunks, std::max<std::size_t>(count, 1));
  using Coeffs = std::vector<std::vector<ComplexBall>>;  // [k][m]
  const Coeffs zero(r, std::vector<ComplexBall>(d, ComplexBall(prec)));
  std::vector<Coeffs> part_h(chunks, zero), part_hbar(chunks, zero);
  parallel_for(chunks, threads, [&](std::size_t ch) {
    for (std::size_t c = ch * count / chunks; c < (ch + 1) * count / chunks; ++c) {
      const KTable& t = k1.tables[c];
      const CycPoly g = G_poly(t, dd.q, Variant::plain);
      const CycPoly gb = G_poly(t, dd.q, Variant::bar);
      std::vector<ComplexBall> km, kbm;
      for (std::size_t m = 0; m < d; ++m) {
        km.push_back(embed(t.at(static_cast<int>(m) * dd.n + dd.q, Variant::plain)));
        kbm.push_back(embed(t.at(static_cast<int>(m) * dd.n + dd.q, Variant::bar)));
      }
      for (std::size_t k = 0; k < r; ++k) {
        const ComplexBall gbz = embed.eval(gb, roots.roots[k]);
        const ComplexBall gz = embed.eval(g, roots.roots[k]);
        for (std::size_t m = 0; m < d; ++m) {
          part_h[ch][k][m] += gbz * km[m];
          part_hbar[ch][k][m] += gz * kbm[m];
        }
      }
    }
  });
  Coeffs h = zero, hbar = zero;
  for (std::size_t ch = 0; ch < chunks; ++ch) {
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t m = 0; m < d; ++m) {
        h[k][m] += part_h[ch][k][m];
        hbar[k][m] += part_hbar[ch][k][m];
      }
    }
  }

  for (std::size_t k = 0; k < r; ++k) {
    const auto f = interp_f(roots, k);
    const RealBall& zk = roots.roots[k];
    double worst = 0.0, scale = 0.0;
    std::vector<RealBall> target, via_theta;
    for (std::size_t m = 0; m < d; ++m) {
      target.push_back(m < f.size() ? -(roots.B[k] * f[m]) : RealBall(prec));
      RealBall acc(prec);
      RealBall zp(1L, prec);
      for (std::size_t ell = 0; ell < d; ++ell) {
        if (tt.entries[ell][m] != 0) acc += zp * RealBall(Rational(tt.entries[ell][m]), prec);
        zp = zp * zk;
      }
      via_theta.push_back(std::move(acc));
      scale = std::max(scale, abs_mid(target.back()));
    }
    for (std::size_t m = 0; m < d; ++m) {
      worst = std::max(worst, upper_double(distance_bound(via_theta[m], target[m])));
      if (!h[k][m].real().overlaps(via_theta[m])) rep.coefficients_match = false;
      if (!h[k][m].imag().contains_zero() || !hbar[k][m].imag().contains_zero()) rep.real_within_radii = false;
      if (!hbar[k][m].overlaps(h[k][m])) rep.bar_equals = false;
    }
    const double rel = scale > 0 ? worst / scale : worst;
    rep.max_rel_error = std::max(rep.max_rel_error, rel);
  }
  if (rep.max_rel_error > kCorollaryTolerance) rep.coefficients_match = false;
  return rep;
}

}  // namespace cpident
