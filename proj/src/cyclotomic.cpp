#include "cpident/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cpident/ball.hpp"

namespace cpident {

namespace {

long mod_floor(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

// Exact division of integer polynomials by a monic divisor; throws on a
// nonzero remainder.
std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  if (den.back() != 1) throw std::logic_error("divide_exact: divisor not monic");
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("divide_exact: nonzero remainder");
  }
  return quot;
}

// Reduce a rational coefficient vector modulo the monic Phi (in place) and
// truncate to phi(M) entries.
void reduce_mod_phi(std::vector<Rational>& v, std::span<const long> phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = v.size(); i-- > d;) {
    if (sgn(v[i]) == 0) continue;
    const Rational c = v[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (phi[j] != 0) v[i - d + j] -= c * phi[j];
    }
    v[i] = 0;
  }
  v.resize(d);
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  std::vector<long> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

int euler_phi(int m) {
  int count = 0;
  for (int k = 1; k <= m; ++k) {
    if (std::gcd(k, m) == 1) ++count;
  }
  return count;
}

const CycField& CycField::of(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycField>> cache;
  if (n < 2) throw std::invalid_argument("CycField: N must be at least 2");
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot.reset(new CycField(n));
  return *slot;
}

CycField::CycField(int n) : n_(n), phi_(cyclotomic_polynomial(2 * n)) {
  const int m = order();
  const std::size_t d = phi_.size() - 1;
  powers_.reserve(static_cast<std::size_t>(m));
  std::vector<long> cur(d, 0);
  cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    powers_.push_back(cur);
    // multiply by zeta: shift up, reduce the overflowing x^d term
    const long top = cur[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t j = 0; j < d; ++j) cur[j] -= top * phi_[j];
    }
  }
  for (int k = 2; k < m; ++k) {
    if (std::gcd(k, m) == 1) units_.push_back(k);
  }
}

CycNum::CycNum(const CycField& field)
    : field_(&field), coeffs_(static_cast<std::size_t>(field.degree())) {}

CycNum::CycNum(const CycField& field, const Rational& value) : CycNum(field) {
  coeffs_[0] = value;
}

CycNum CycNum::zeta_power(const CycField& field, long k) {
  CycNum r(field);
  const auto p = field.power(static_cast<int>(mod_floor(k, field.order())));
  for (std::size_t i = 0; i < p.size(); ++i) r.coeffs_[i] = p[i];
  return r;
}

CycNum CycNum::from_cyclic(const CycField& field, std::span<const std::int64_t> v) {
  if (v.size() != static_cast<std::size_t>(field.order())) {
    throw std::invalid_argument("from_cyclic: vector length must equal the ring order");
  }
  const std::size_t d = static_cast<std::size_t>(field.degree());
  std::vector<Integer> acc(d);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    const Integer c(static_cast<long>(v[k]));
    const auto p = field.power(static_cast<int>(k));
    for (std::size_t i = 0; i < d; ++i) {
      if (p[i] != 0) acc[i] += c * p[i];
    }
  }
  CycNum r(field);
  for (std::size_t i = 0; i < d; ++i) r.coeffs_[i] = Rational(acc[i]);
  return r;
}

CycNum CycNum::from_coefficients(const CycField& field, std::vector<Rational> coeffs) {
  // fold powers >= M back using zeta^M = 1, then reduce by Phi
  const std::size_t m = static_cast<std::size_t>(field.order());
  if (coeffs.size() > m) {
    for (std::size_t i = m; i < coeffs.size(); ++i) coeffs[i % m] += coeffs[i];
    coeffs.resize(m);
  }
  if (coeffs.size() < static_cast<std::size_t>(field.degree())) {
    coeffs.resize(static_cast<std::size_t>(field.degree()));
  }
  reduce_mod_phi(coeffs, field.phi());
  CycNum r(field);
  r.coeffs_ = std::move(coeffs);
  return r;
}

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

std::optional<Rational> CycNum::to_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return std::nullopt;
  }
  return coeffs_[0];
}

CycNum CycNum::galois(int k) const {
  const int m = field_->order();
  const std::size_t d = coeffs_.size();
  CycNum r(*field_);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const auto p = field_->power(static_cast<int>(mod_floor(static_cast<long>(i) * k, m)));
    for (std::size_t j = 0; j < d; ++j) {
      if (p[j] != 0) r.coeffs_[j] += coeffs_[i] * p[j];
    }
  }
  return r;
}

CycNum CycNum::conjugate() const { return galois(field_->order() - 1); }

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum::inverse: division by zero");
  // a^-1 = (prod of the other conjugates) / norm(a); the norm is rational.
  CycNum others(*field_, 1);
  for (int k : field_->galois_units()) others *= galois(k);
  const auto norm = (*this * others).to_rational();
  if (!norm) throw std::logic_error("CycNum::inverse: norm is not rational");
  others *= Rational(1) / *norm;
  return others;
}

CycNum CycNum::mul_zeta_power(long k) const {
  const int m = field_->order();
  const long s = mod_floor(k, m);
  std::vector<Rational> v(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    v[static_cast<std::size_t>(mod_floor(static_cast<long>(i) + s, m))] = coeffs_[i];
  }
  return from_coefficients(*field_, std::move(v));
}

void CycNum::check_same_field(const CycNum& other) const {
  if (field_->n() != other.field_->n()) {
    throw std::invalid_argument("CycNum: operands belong to different cyclotomic fields");
  }
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs) { return *this = *this * rhs; }

CycNum& CycNum::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  a.check_same_field(b);
  const std::size_t d = a.coeffs_.size();
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce_mod_phi(prod, a.field_->phi());
  CycNum r(*a.field_);
  r.coeffs_ = std::move(prod);
  return r;
}

CycNum CycNum::operator-() const {
  CycNum r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
  return a.field_->n() == b.field_->n() && a.coeffs_ == b.coeffs_;
}

std::string CycNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "z";
    if (i > 1) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

ComplexBall complex_embed(const CycNum& a, int precision_bits) {
  if (precision_bits < 32) throw std::invalid_argument("complex_embed: precision must be >= 32 bits");
  // Ten guard bits absorb the accumulation over phi(M) terms.
  const int work = precision_bits + 10;
  const int n = a.field().n();
  const RealBall pi = RealBall::pi(work);
  ComplexBall sum(work);
  const auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    const RealBall coeff(c[i], work);
    if (i == 0) {
      sum += ComplexBall(coeff);
      continue;
    }
    const RealBall angle = pi * RealBall(Rational(Rational(static_cast<long>(i)) / n), work);
    sum += ComplexBall(coeff * angle.cos(), coeff * angle.sin());
  }
  return sum;
}

}  // namespace cpident
