#include "cpident/cycpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace cpident {

CycPoly::CycPoly(const CycField& field, Indeterminate var) : field_(&field), var_(var) {}

CycPoly::CycPoly(const CycField& field, std::vector<CycNum> coeffs, Indeterminate var)
    : field_(&field), var_(var), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.field().n() != field.n()) throw std::invalid_argument("CycPoly: coefficient field mismatch");
  }
  trim();
}

CycPoly CycPoly::constant(const CycNum& c, Indeterminate var) {
  return CycPoly(c.field(), {c}, var);
}

CycPoly CycPoly::monomial(const CycNum& c, int degree, Indeterminate var) {
  if (degree < 0) throw std::invalid_argument("CycPoly::monomial: negative degree");
  std::vector<CycNum> v(static_cast<std::size_t>(degree) + 1, CycNum(c.field()));
  v.back() = c;
  return CycPoly(c.field(), std::move(v), var);
}

CycPoly CycPoly::from_integers(const CycField& field, std::span<const Integer> coeffs,
                               Indeterminate var) {
  std::vector<CycNum> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(field, Rational(c));
  return CycPoly(field, std::move(v), var);
}

CycNum CycPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return CycNum(*field_);
  return coeffs_[static_cast<std::size_t>(i)];
}

void CycPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void CycPoly::check_compatible(const CycPoly& other) const {
  if (field_->n() != other.field_->n()) throw std::invalid_argument("CycPoly: field mismatch");
  if (var_ != other.var_) throw std::invalid_argument("CycPoly: indeterminate mismatch");
}

CycPoly CycPoly::conjugate() const {
  std::vector<CycNum> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.conjugate());
  return CycPoly(*field_, std::move(v), var_);
}

CycPoly CycPoly::scale_argument(const CycNum& c) const {
  std::vector<CycNum> v;
  v.reserve(coeffs_.size());
  CycNum power(*field_, 1);
  for (const auto& a : coeffs_) {
    v.push_back(a * power);
    power *= c;
  }
  return CycPoly(*field_, std::move(v), var_);
}

CycNum CycPoly::eval(const CycNum& x) const {
  CycNum acc(*field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x;
    acc += *it;
  }
  return acc;
}

ComplexBall CycPoly::eval(const RealBall& x) const {
  ComplexBall acc(x.precision());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + complex_embed(*it, x.precision());
  }
  return acc;
}

CycPoly CycPoly::with_var(Indeterminate var) const {
  CycPoly r(*this);
  r.var_ = var;
  return r;
}

CycPoly& CycPoly::operator+=(const CycPoly& rhs) {
  check_compatible(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), CycNum(*field_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

CycPoly& CycPoly::operator-=(const CycPoly& rhs) {
  check_compatible(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), CycNum(*field_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

CycPoly& CycPoly::operator*=(const CycNum& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return CycPoly(*a.field_, a.var_);
  std::vector<CycNum> v(a.coeffs_.size() + b.coeffs_.size() - 1, CycNum(*a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycPoly(*a.field_, std::move(v), a.var_);
}

CycPoly CycPoly::operator-() const {
  CycPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycPoly CycPoly::pow(unsigned e) const {
  CycPoly result = constant(CycNum(*field_, 1), var_);
  CycPoly base(*this);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

CycPoly::DivMod CycPoly::divmod(const CycPoly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw std::domain_error("CycPoly::divmod: division by zero polynomial");
  const int dd = divisor.degree();
  std::vector<CycNum> rem = coeffs_;
  if (degree() < dd) return {CycPoly(*field_, var_), *this};
  std::vector<CycNum> quot(static_cast<std::size_t>(degree() - dd) + 1, CycNum(*field_));
  const CycNum lead_inv = divisor.coeffs_.back().inverse();
  for (int i = degree(); i >= dd; --i) {
    const CycNum& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    const CycNum q = top * lead_inv;
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd), CycNum(*field_));
  return {CycPoly(*field_, std::move(quot), var_), CycPoly(*field_, std::move(rem), var_)};
}

bool operator==(const CycPoly& a, const CycPoly& b) {
  return a.field_->n() == b.field_->n() && a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
}

std::string CycPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  const char v = var_ == Indeterminate::t ? 't' : 'z';
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << coeffs_[i].to_string() << ")";
    if (i > 0) out << "*" << v;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace cpident
