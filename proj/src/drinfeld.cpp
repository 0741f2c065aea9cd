#include "cpident/drinfeld.hpp"

#include <stdexcept>

#include "cpident/compositions.hpp"

namespace cpident {

Integer DrinfeldData::coeff(int m) const {
  if (m < 0 || m > degree) return 0;
  return lambda[static_cast<std::size_t>(m)];
}

Integer DrinfeldData::value_at(const Integer& z) const {
  Integer acc = 0;
  for (auto it = lambda.rbegin(); it != lambda.rend(); ++it) acc = acc * z + *it;
  return acc;
}

int drinfeld_degree(int n, int length, int q) {
  return ((n - 1) * length - q) / n;
}

CycPoly drinfeld_by_root_average(int n, int length, int q) {
  const CycField& field = CycField::of(n);
  const CycNum one(field, 1);
  const CycPoly numerator =
      (CycPoly::constant(one) - CycPoly::monomial(one, n)).pow(static_cast<unsigned>(length));
  CycPoly sum(field);
  for (int a = 0; a < n; ++a) {
    const CycPoly factor = CycPoly::constant(one) - CycPoly::monomial(CycNum::omega_power(field, a), 1);
    CycPoly term = numerator;
    for (int i = 0; i < length; ++i) {
      auto qr = term.divmod(factor);
      if (!qr.remainder.is_zero()) throw std::logic_error("drinfeld: inexact division by (1 - omega^a t)");
      term = std::move(qr.quotient);
    }
    sum += term * CycNum::omega_power(field, -static_cast<long>(q) * a);
  }
  // t^-Q shift and z = t^N: only exponents = Q (mod N) may survive
  std::vector<CycNum> z_coeffs;
  for (int i = 0; i <= sum.degree(); ++i) {
    const CycNum c = sum.coeff(i) * Rational(Rational(1) / n);
    if ((i - q) % n != 0 || i < q) {
      if (!c.is_zero()) throw std::logic_error("drinfeld: root average leaves a stray power of t");
      continue;
    }
    const std::size_t m = static_cast<std::size_t>((i - q) / n);
    if (z_coeffs.size() <= m) z_coeffs.resize(m + 1, CycNum(field));
    z_coeffs[m] = c;
  }
  return CycPoly(field, std::move(z_coeffs), Indeterminate::z);
}

DrinfeldData drinfeld(int n, int length, int q) {
  if (q < 0 || q > n - 1) throw std::invalid_argument("drinfeld: Q must lie in [0, N-1]");
  const auto c = count_cm(length, n);
  DrinfeldData d;
  d.n = n;
  d.length = length;
  d.q = q;
  d.degree = drinfeld_degree(n, length, q);
  for (int m = 0; m <= d.degree; ++m) d.lambda.push_back(c.at(static_cast<std::size_t>(m * n + q)));

  const CycPoly avg = drinfeld_by_root_average(n, length, q);
  const CycPoly direct = CycPoly::from_integers(CycField::of(n), d.lambda, Indeterminate::z);
  if (!(avg == direct)) throw std::logic_error("drinfeld: coefficient routes disagree");
  return d;
}

}  // namespace cpident
