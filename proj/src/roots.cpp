#include "cpident/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpident {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly to_rat(std::span<const Integer> p) {
  RatPoly r(p.begin(), p.end());
  trim(r);
  return r;
}

Rational eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Euclidean division over Q.
std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
  if (den.empty()) throw std::domain_error("polynomial division by zero");
  const int dd = degree(den);
  if (degree(num) < dd) return {RatPoly{}, num};
  RatPoly quot(static_cast<std::size_t>(degree(num) - dd) + 1);
  for (int i = degree(num); i >= dd; --i) {
    const Rational c = num[static_cast<std::size_t>(i)] / den.back();
    quot[static_cast<std::size_t>(i - dd)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= dd; ++j) num[static_cast<std::size_t>(i - dd + j)] -= c * den[static_cast<std::size_t>(j)];
  }
  num.resize(static_cast<std::size_t>(dd));
  trim(num);
  trim(quot);
  return {quot, num};
}

RatPoly monic(RatPoly p) {
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(std::move(a));
}

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> seq{p, derivative(p)};
  while (!seq.back().empty()) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().empty()) seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int changes_at(const std::vector<RatPoly>& seq, const Rational& x) {
  std::vector<int> s;
  for (const auto& p : seq) s.push_back(sgn(eval(p, x)));
  return sign_changes(s);
}

int changes_at_infinity(const std::vector<RatPoly>& seq, bool positive) {
  std::vector<int> s;
  for (const auto& p : seq) {
    int sign = sgn(p.back());
    if (!positive && degree(p) % 2 == 1) sign = -sign;
    s.push_back(sign);
  }
  return sign_changes(s);
}

// Strict bound on |roots|: 1 + max |a_i / a_n|.
Rational cauchy_bound(const RatPoly& p) {
  Rational best = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) best = std::max(best, Rational(abs(p[i] / p.back())));
  return best + 1;
}

// Divisors of |v| by trial division; empty when |v| is too large to factor cheaply.
std::vector<Integer> divisors(const Integer& v) {
  Integer a = abs(v);
  std::vector<Integer> out;
  if (a > Integer("1000000000000")) return out;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  }
  return out;
}

std::vector<Rational> rational_roots(const RatPoly& p) {
  // primitive integer multiple of p
  Integer den_lcm = 1;
  for (const auto& c : p) den_lcm = lcm(den_lcm, Integer(c.get_den()));
  std::vector<Integer> ip;
  for (const auto& c : p) ip.push_back(Integer(c * den_lcm));
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (low < ip.size() && ip[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  const auto num_div = divisors(ip[low]);
  const auto den_div = divisors(ip.back());
  if (num_div.empty() || den_div.empty()) return roots;
  for (const auto& a : num_div) {
    for (const auto& b : den_div) {
      for (int s : {-1, 1}) {
        Rational cand(a * s, b);
        cand.canonicalize();
        if (sgn(eval(p, cand)) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end()) {
          roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct Interval {
  Rational lo;
  Rational hi;
};

void isolate(const std::vector<RatPoly>& seq, Interval iv, int count, std::vector<Interval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(iv);
    return;
  }
  const Rational mid = (iv.lo + iv.hi) / 2;
  const int left = changes_at(seq, iv.lo) - changes_at(seq, mid);
  isolate(seq, {iv.lo, mid}, left, out);
  isolate(seq, {mid, iv.hi}, count - left, out);
}

// Halve (lo, hi] keeping the sign change of p (p has no rational roots).
void bisect_once(const RatPoly& p, Interval& iv) {
  const Rational mid = (iv.lo + iv.hi) / 2;
  if (sgn(eval(p, iv.lo)) != sgn(eval(p, mid))) {
    iv.hi = mid;
  } else {
    iv.lo = mid;
  }
}

RealBall eval_ball(const std::vector<RealBall>& p, const RealBall& x) {
  RealBall acc(x.precision());
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealBall interval_ball(const Interval& iv, int prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_set_q(lo.get(), iv.lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), iv.hi.get_mpq_t(), MPFR_RNDU);
  return RealBall::from_endpoints(lo, hi, prec);
}

std::vector<RealBall> ball_coeffs(const RatPoly& p, int prec) {
  std::vector<RealBall> out;
  for (const auto& c : p) out.emplace_back(c, prec);
  return out;
}

// Interval Newton from an isolating interval of a simple, irrational root.
RealBall refine(const RatPoly& p, Interval iv, int precision, int work, bool& converged) {
  const auto pb = ball_coeffs(p, work);
  const auto db = ball_coeffs(derivative(p), work);
  for (int guard = 0; guard < 4 * work; ++guard) {
    if (!eval_ball(db, interval_ball(iv, work)).contains_zero()) break;
    bisect_once(p, iv);
  }
  RealBall x = interval_ball(iv, work);
  const int sign_lo = sgn(eval(p, iv.lo));
  converged = false;
  for (int iter = 0; iter < 4 * work; ++iter) {
    if (x.radius_at_most_pow2(-precision)) break;
    const RealBall d = eval_ball(db, x);
    if (d.contains_zero()) break;
    const RealBall m = RealBall::from_mid_rad(x.mid(), Mpfr(RealBall::kRadiusPrecision), work);
    const RealBall pm = eval_ball(pb, m);
    auto next = (m - pm / d).intersect(x);
    if (!next) throw std::logic_error("interval Newton lost the root");
    Mpfr half(RealBall::kRadiusPrecision);
    mpfr_div_2ui(half.get(), x.rad().get(), 1, MPFR_RNDU);
    if (mpfr_lessequal_p(next->rad().get(), half.get())) {
      x = *next;
      continue;
    }
    // otherwise halve by the sign at the midpoint, which must be decidable
    if (pm.contains_zero()) {
      x = *next;
      break;
    }
    const bool root_left = (pm.is_positive() ? 1 : -1) != sign_lo;
    x = root_left ? RealBall::from_endpoints(next->lower(), m.mid(), work)
                  : RealBall::from_endpoints(m.mid(), next->upper(), work);
  }
  converged = x.radius_at_most_pow2(-precision);
  return x;
}

}  // namespace

Integer resultant(std::span<const Integer> a_in, std::span<const Integer> b_in) {
  std::vector<Integer> a(a_in.begin(), a_in.end()), b(b_in.begin(), b_in.end());
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (!b.empty() && b.back() == 0) b.pop_back();
  if (a.empty() || b.empty()) return 0;
  const std::size_t n = a.size() - 1, m = b.size() - 1;
  const std::size_t size = n + m;
  if (size == 0) return 1;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) s[i][i + k] = a[n - k];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) s[m + i][i + k] = b[m - k];
  }
  // Bareiss fraction-free elimination
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (s[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < size && s[r][k] == 0) ++r;
      if (r == size) return 0;
      std::swap(s[k], s[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        s[i][j] = (s[i][j] * s[k][k] - s[i][k] * s[k][j]) / prev;
      }
      s[i][k] = 0;
    }
    prev = s[k][k];
  }
  return sign * s[size - 1][size - 1];
}

int sturm_count(std::span<const Integer> p, const Rational& lo, const Rational& hi) {
  const auto seq = sturm_sequence(to_rat(p));
  return changes_at(seq, lo) - changes_at(seq, hi);
}

RootCertificate certify_roots(const DrinfeldData& dd) {
  RootCertificate cert;
  const RatPoly p = to_rat(dd.lambda);
  if (degree(p) < 1) {
    cert.distinct = true;
    return cert;
  }
  std::vector<Integer> deriv;
  for (std::size_t i = 1; i < dd.lambda.size(); ++i) deriv.push_back(dd.lambda[i] * static_cast<long>(i));
  cert.resultant = resultant(dd.lambda, deriv);
  cert.distinct = cert.resultant != 0;
  const long n = degree(p);
  Integer disc = cert.resultant / dd.lambda.back();
  if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
  cert.discriminant = disc;
  const auto seq = sturm_sequence(p);
  cert.real_count = changes_at_infinity(seq, false) - changes_at_infinity(seq, true);
  return cert;
}

RootSet isolate_and_refine(const DrinfeldData& dd, int precision_bits) {
  if (precision_bits < 32) throw std::invalid_argument("isolate_and_refine: precision must be >= 32 bits");
  RootSet rs;
  rs.drinfeld = dd;
  rs.precision = precision_bits;
  const RatPoly p = to_rat(dd.lambda);
  if (degree(p) < 1) {
    rs.distinct = rs.all_real = rs.converged = true;
    return rs;
  }
  const RootCertificate cert = certify_roots(dd);
  rs.distinct = cert.distinct;

  // square-free part, then strip rational roots
  const RatPoly g = gcd(p, derivative(p));
  RatPoly sqfree = divmod(p, g).first;
  const auto rational = rational_roots(sqfree);
  RatPoly irr = sqfree;
  for (const auto& r : rational) irr = divmod(irr, RatPoly{-r, Rational(1)}).first;

  std::vector<Interval> isolated;
  if (degree(irr) >= 1) {
    const auto seq = sturm_sequence(irr);
    const Rational bound = cauchy_bound(irr);
    const int total = changes_at(seq, -bound) - changes_at(seq, bound);
    isolate(seq, {-bound, bound}, total, isolated);
  }
  // keep rational roots out of the closed isolating intervals
  for (auto& iv : isolated) {
    for (int guard = 0; guard < 10000; ++guard) {
      const bool clash = std::any_of(rational.begin(), rational.end(),
                                     [&](const Rational& r) { return r >= iv.lo && r <= iv.hi; });
      if (!clash) break;
      bisect_once(irr, iv);
    }
  }

  std::vector<RatPoly> chain;  // gcd(P,P'), gcd of that with its derivative, ...
  for (RatPoly c = g; degree(c) >= 1; c = gcd(c, derivative(c))) chain.push_back(c);

  const Rational max_abs = cauchy_bound(p);
  const Integer max_int = Integer(max_abs.get_num() / max_abs.get_den()) + 1;
  const int work = precision_bits + 32 + static_cast<int>(mpz_sizeinbase(max_int.get_mpz_t(), 2));

  struct Found {
    Rational key;
    RealBall ball;
    int mult;
    std::optional<Rational> exact;
  };
  std::vector<Found> found;
  bool all_converged = true;
  for (const auto& r : rational) {
    int mult = 1;
    for (const auto& c : chain) {
      if (sgn(eval(c, r)) == 0) ++mult;
    }
    found.push_back({r, RealBall(r, work), mult, r});
  }
  for (const auto& iv : isolated) {
    int mult = 1;
    for (const auto& c : chain) {
      const auto seq = sturm_sequence(c);
      if (changes_at(seq, iv.lo) - changes_at(seq, iv.hi) > 0) ++mult;
    }
    bool ok = false;
    RealBall ball = refine(irr, iv, precision_bits, work, ok);
    all_converged = all_converged && ok;
    found.push_back({iv.lo, std::move(ball), mult, std::nullopt});
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.key < b.key; });

  int with_mult = 0;
  for (auto& f : found) {
    rs.roots.push_back(std::move(f.ball));
    rs.multiplicity.push_back(f.mult);
    rs.exact.push_back(std::move(f.exact));
    with_mult += f.mult;
  }
  rs.real_count = static_cast<int>(rs.roots.size());
  rs.all_real = with_mult == dd.degree;
  rs.converged = all_converged;
  rs.B = compute_B(rs);
  return rs;
}

std::vector<RealBall> compute_B(const RootSet& rs) {
  const int prec = rs.roots.empty() ? rs.precision : rs.roots.front().precision();
  const RealBall lead(Rational(rs.drinfeld.lambda.back()), prec);
  std::vector<RealBall> out;
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    if (rs.multiplicity[k] > 1) {
      out.emplace_back(0L, prec);
      continue;
    }
    RealBall b = rs.roots[k] * lead * lead;
    for (std::size_t l = 0; l < rs.roots.size(); ++l) {
      if (l == k) continue;
      const RealBall diff = rs.roots[k] - rs.roots[l];
      b = b * diff.pow(2U * static_cast<unsigned>(rs.multiplicity[l]));
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace cpident
