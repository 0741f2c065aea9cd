#include "cpident/polyform.hpp"

#include <stdexcept>

#include "cpident/cyclic_sum.hpp"
#include "cpident/qseries.hpp"

namespace cpident {

namespace {

std::vector<SiteFactors> brute_sites(const Composition& c) {
  const int big_n = c.bound();
  const auto& table = QBinomialTable::of(big_n);
  std::vector<SiteFactors> sites(static_cast<std::size_t>(c.length()));
  for (int j = 0; j < c.length(); ++j) {
    auto& site = sites[static_cast<std::size_t>(j)];
    for (int np = 0; np < big_n; ++np) {
      const int top = c[static_cast<std::size_t>(j)] + np;
      if (table.binom(top, np).is_zero()) {
        site.by_value.emplace_back();
        continue;
      }
      const auto f = table.binom_cyclic(top, np);
      site.by_value.emplace_back(f.begin(), f.end());
    }
  }
  return sites;
}

std::vector<long> exponents(const Composition& c, Variant variant) {
  const auto pd = prefix_data(c);
  if (variant == Variant::plain) return {pd.before.begin(), pd.before.end() - 1};
  return pd.after;
}

using Ring = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("gen_g: coefficient overflow");
  return r;
}

// (1 - t^N)^(L-k) / prod_j (1 - t zeta^(2 e_j)), carried in Z[x]/(x^M - 1)[t]
// and reduced into Q(zeta) at the end.
CycPoly generating_function(const Composition& c, const std::vector<long>& exps) {
  const int big_n = c.bound();
  const int len = c.length();
  const int total = c.total();
  if (total % big_n != 0) {
    throw std::invalid_argument("gen_g: composition total must be a multiple of N");
  }
  const int k = total / big_n;
  const CycField& field = CycField::of(big_n);
  const int order = field.order();
  const int top = (big_n - 1) * len - k * big_n;
  // numerator; k <= L always holds since parts are below N
  std::vector<Ring> p(static_cast<std::size_t>((len - k) * big_n) + 1, Ring(static_cast<std::size_t>(order), 0));
  std::int64_t binom = 1;
  for (int i = 0; i <= len - k; ++i) {
    p[static_cast<std::size_t>(i * big_n)][0] = (i % 2 == 0) ? binom : -binom;
    binom = binom * (len - k - i) / (i + 1);
  }
  for (int j = 0; j < len; ++j) {
    const int shift = static_cast<int>((2 * exps[static_cast<std::size_t>(j)]) % order);
    const std::size_t deg = p.size() - 1;
    std::vector<Ring> q(deg, Ring(static_cast<std::size_t>(order), 0));
    // q_i = p_i + c q_(i-1), remainder p_D + c q_(D-1)
    for (std::size_t i = 0; i <= deg; ++i) {
      Ring cur = p[i];
      if (i > 0) {
        const Ring& prev = q[i - 1];
        for (int t = 0; t < order; ++t) {
          const std::size_t from = static_cast<std::size_t>((t - shift + order) % order);
          cur[static_cast<std::size_t>(t)] = checked_add(cur[static_cast<std::size_t>(t)], prev[from]);
        }
      }
      if (i < deg) {
        q[i] = std::move(cur);
      } else if (!CycNum::from_cyclic(field, cur).is_zero()) {
        throw std::logic_error("gen_g: nonzero remainder in exact division");
      }
    }
    p = std::move(q);
  }
  std::vector<CycNum> coeffs;
  coeffs.reserve(p.size());
  for (const auto& r : p) coeffs.push_back(CycNum::from_cyclic(field, r));
  CycPoly g(field, std::move(coeffs));
  if (g.degree() != top) throw std::logic_error("gen_g: unexpected degree");
  return g;
}

}  // namespace

CycNum K_brute(const Composition& c, int m, Variant variant, const kernels::KernelSet& k) {
  const CycField& field = CycField::of(c.bound());
  if (m < 0 || m > (c.bound() - 1) * c.length()) return CycNum(field);
  const auto sites = brute_sites(c);
  const auto exps = exponents(c, variant);
  const auto sum = cyclic_sum_fixed_total(
      field.order(), std::span<const SiteFactors>(sites), m,
      [&](int j, int n, int) { return 2L * n * exps[static_cast<std::size_t>(j)]; }, k);
  return CycNum::from_cyclic(field, sum);
}

std::vector<CycNum> K_brute_all(const Composition& c, Variant variant, const kernels::KernelSet& k) {
  const CycField& field = CycField::of(c.bound());
  const auto sites = brute_sites(c);
  const auto exps = exponents(c, variant);
  const auto sums = cyclic_sum_by_total(
      field.order(), std::span<const SiteFactors>(sites),
      [&](int j, int n, int) { return 2L * n * exps[static_cast<std::size_t>(j)]; }, k);
  std::vector<CycNum> out;
  out.reserve(sums.size());
  for (const auto& s : sums) out.push_back(CycNum::from_cyclic(field, s));
  return out;
}

CycPoly gen_g(const Composition& c) { return generating_function(c, exponents(c, Variant::plain)); }

CycPoly gen_gbar_closed(const Composition& c) {
  // Nbar_j = kN - N_(j+1); conjugation sends omega^(N_j) to omega^(-N_j)
  return generating_function(c, exponents(c, Variant::bar));
}

CycNum KTable::at(int m, Variant variant) const {
  const auto& v = variant == Variant::plain ? K : Kbar;
  if (m < 0 || m >= static_cast<int>(v.size())) return CycNum(CycField::of(composition.bound()));
  return v[static_cast<std::size_t>(m)];
}

KTable K_via_g(const Composition& c) {
  const CycPoly g = gen_g(c);
  KTable table{c, c.total() / c.bound(), {}, {}};
  for (const auto& coeff : g.coeffs()) {
    table.K.push_back(coeff);
    table.Kbar.push_back(coeff.conjugate());
  }
  return table;
}

CycPoly G_poly(const KTable& table, int q, Variant variant) {
  const int big_n = table.composition.bound();
  if (q < 0 || q >= big_n) throw std::invalid_argument("G_poly: Q must lie in [0, N-1]");
  const auto& src = variant == Variant::plain ? table.K : table.Kbar;
  std::vector<CycNum> coeffs;
  for (std::size_t i = static_cast<std::size_t>(q); i < src.size(); i += static_cast<std::size_t>(big_n)) {
    coeffs.push_back(src[i]);
  }
  return CycPoly(CycField::of(big_n), std::move(coeffs), Indeterminate::z);
}

CycPoly G_poly(const Composition& c, int q, Variant variant) { return G_poly(K_via_g(c), q, variant); }

std::vector<RealBall> interp_f(const RootSet& roots, std::size_t k) {
  if (!roots.distinct) throw std::invalid_argument("interp_f: roots are not certified distinct");
  if (k >= roots.roots.size()) throw std::invalid_argument("interp_f: root index out of range");
  const RealBall& zk = roots.roots[k];
  const int prec = zk.precision();
  std::vector<RealBall> poly{RealBall(1L, prec)};
  RealBall denom(1L, prec);
  for (std::size_t l = 0; l < roots.roots.size(); ++l) {
    if (l == k) continue;
    const RealBall& zl = roots.roots[l];
    // poly *= (z - z_l)
    std::vector<RealBall> next(poly.size() + 1, RealBall(prec));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * zl;
    }
    poly = std::move(next);
    denom *= zk - zl;
  }
  for (auto& c : poly) c = c / denom;
  return poly;
}

RealBall eval_real(const std::vector<RealBall>& coeffs, const RealBall& x) {
  RealBall acc(x.precision());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<std::int64_t> cyclic_multiply(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                                          const kernels::KernelSet& k) {
  if (a.size() != b.size()) throw std::invalid_argument("cyclic_multiply: length mismatch");
  const int order = static_cast<int>(a.size());
  std::vector<std::int64_t> a2(2 * a.size());
  std::copy(a.begin(), a.end(), a2.begin());
  std::copy(a.begin(), a.end(), a2.begin() + order);
  std::vector<std::int64_t> out(a.size(), 0);
  k.cyclic_mac(a2.data(), b.data(), order, 0, out.data());
  return out;
}

}  // namespace cpident
