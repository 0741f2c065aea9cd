#include "cpident/ball.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cpident {

Mpfr::Mpfr(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(const Mpfr& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Mpfr& Mpfr::operator=(const Mpfr& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(value_); }

namespace {

constexpr mpfr_prec_t kRad = RealBall::kRadiusPrecision;

// rad += |mid| * 2^-prec when the midpoint computation was inexact.  Half an
// ulp of a p-bit float y is at most |y| 2^-p.
void add_rounding_error(Mpfr& rad, const Mpfr& mid, int ternary) {
  if (ternary == 0) return;
  Mpfr err(kRad);
  mpfr_abs(err.get(), mid.get(), MPFR_RNDU);
  mpfr_mul_2si(err.get(), err.get(), -static_cast<long>(mid.precision()), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), err.get(), MPFR_RNDU);
}

Mpfr abs_copy(const Mpfr& x) {
  Mpfr r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);  // exact
  return r;
}

}  // namespace

RealBall::RealBall(int precision) : mid_(precision), rad_(kRad) {}

RealBall::RealBall(const mpq_class& value, int precision) : mid_(precision), rad_(kRad) {
  const int t = mpfr_set_q(mid_.get(), value.get_mpq_t(), MPFR_RNDN);
  add_rounding_error(rad_, mid_, t);
}

RealBall::RealBall(long value, int precision) : mid_(precision), rad_(kRad) {
  const int t = mpfr_set_si(mid_.get(), value, MPFR_RNDN);
  add_rounding_error(rad_, mid_, t);
}

RealBall RealBall::from_endpoints(const Mpfr& lo, const Mpfr& hi, int precision) {
  RealBall r(precision);
  Mpfr sum(std::max(lo.precision(), hi.precision()) + 1);
  mpfr_add(sum.get(), lo.get(), hi.get(), MPFR_RNDN);  // exact with one extra bit
  mpfr_div_2ui(sum.get(), sum.get(), 1, MPFR_RNDN);
  mpfr_set(r.mid_.get(), sum.get(), MPFR_RNDN);
  Mpfr d1(kRad), d2(kRad);
  mpfr_sub(d1.get(), r.mid_.get(), lo.get(), MPFR_RNDU);
  mpfr_sub(d2.get(), hi.get(), r.mid_.get(), MPFR_RNDU);
  mpfr_max(r.rad_.get(), d1.get(), d2.get(), MPFR_RNDU);
  if (mpfr_sgn(r.rad_.get()) < 0) mpfr_set_zero(r.rad_.get(), 1);
  return r;
}

RealBall RealBall::from_mid_rad(const Mpfr& mid, const Mpfr& rad, int precision) {
  RealBall r(precision);
  const int t = mpfr_set(r.mid_.get(), mid.get(), MPFR_RNDN);
  mpfr_set(r.rad_.get(), rad.get(), MPFR_RNDU);
  add_rounding_error(r.rad_, r.mid_, t);
  return r;
}

RealBall RealBall::pi(int precision) {
  Mpfr lo(precision), hi(precision);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return from_endpoints(lo, hi, precision);
}

Mpfr RealBall::lower() const {
  Mpfr r(mid_.precision());
  mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return r;
}

Mpfr RealBall::upper() const {
  Mpfr r(mid_.precision());
  mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return r;
}

Mpfr RealBall::mag() const {
  Mpfr r(kRad);
  mpfr_abs(r.get(), mid_.get(), MPFR_RNDU);
  mpfr_add(r.get(), r.get(), rad_.get(), MPFR_RNDU);
  return r;
}

bool RealBall::contains_zero() const {
  return mpfr_cmpabs(mid_.get(), rad_.get()) <= 0;
}

bool RealBall::contains(const mpq_class& value) const {
  // |mid - value| <= rad, decided exactly through rationals.
  mpq_class mid_q;
  mpfr_get_q(mid_q.get_mpq_t(), mid_.get());
  mpq_class rad_q;
  mpfr_get_q(rad_q.get_mpq_t(), rad_.get());
  return abs(mid_q - value) <= rad_q;
}

bool RealBall::overlaps(const RealBall& other) const {
  return mpfr_lessequal_p(lower().get(), other.upper().get()) &&
         mpfr_lessequal_p(other.lower().get(), upper().get());
}

bool RealBall::is_positive() const { return mpfr_sgn(lower().get()) > 0; }
bool RealBall::is_negative() const { return mpfr_sgn(upper().get()) < 0; }

bool RealBall::radius_at_most_pow2(long exp2) const {
  Mpfr bound(kRad);
  mpfr_set_ui_2exp(bound.get(), 1, exp2, MPFR_RNDN);
  return mpfr_lessequal_p(rad_.get(), bound.get());
}

bool RealBall::radius_at_most(const Mpfr& bound) const {
  return mpfr_lessequal_p(rad_.get(), bound.get());
}

std::optional<RealBall> RealBall::intersect(const RealBall& other) const {
  Mpfr lo = lower(), hi = upper();
  Mpfr olo = other.lower(), ohi = other.upper();
  if (mpfr_less_p(lo.get(), olo.get())) lo = olo;
  if (mpfr_greater_p(hi.get(), ohi.get())) hi = ohi;
  if (mpfr_greater_p(lo.get(), hi.get())) return std::nullopt;
  return from_endpoints(lo, hi, std::max(precision(), other.precision()));
}

double RealBall::mid_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }
double RealBall::rad_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

std::string to_decimal(const Mpfr& value, int digits) {
  char* buf = nullptr;
  const int n = mpfr_asprintf(&buf, "%.*Re", digits - 1, value.get());
  if (n < 0 || buf == nullptr) throw std::runtime_error("mpfr_asprintf failed");
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string RealBall::mid_string(int digits) const { return to_decimal(mid_, digits); }

std::string RealBall::rad_string() const {
  char* buf = nullptr;
  const int n = mpfr_asprintf(&buf, "%.2RUe", rad_.get());
  if (n < 0 || buf == nullptr) throw std::runtime_error("mpfr_asprintf failed");
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

RealBall RealBall::operator-() const {
  RealBall r(*this);
  mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
  return r;
}

RealBall operator+(const RealBall& a, const RealBall& b) {
  RealBall r(std::max(a.precision(), b.precision()));
  const int t = mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  add_rounding_error(r.rad_, r.mid_, t);
  return r;
}

RealBall operator-(const RealBall& a, const RealBall& b) {
  RealBall r(std::max(a.precision(), b.precision()));
  const int t = mpfr_sub(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  add_rounding_error(r.rad_, r.mid_, t);
  return r;
}

RealBall operator*(const RealBall& a, const RealBall& b) {
  RealBall r(std::max(a.precision(), b.precision()));
  const int t = mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  // |a b - am bm| <= |am| rb + |bm| ra + ra rb
  Mpfr term(kRad);
  const Mpfr am = abs_copy(a.mid_), bm = abs_copy(b.mid_);
  mpfr_mul(r.rad_.get(), am.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_mul(term.get(), bm.get(), a.rad_.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), r.rad_.get(), term.get(), MPFR_RNDU);
  mpfr_mul(term.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), r.rad_.get(), term.get(), MPFR_RNDU);
  add_rounding_error(r.rad_, r.mid_, t);
  return r;
}

RealBall operator/(const RealBall& a, const RealBall& b) {
  if (b.contains_zero()) throw std::domain_error("ball division by a ball containing zero");
  RealBall r(std::max(a.precision(), b.precision()));
  const int t = mpfr_div(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  // |a/b - am/bm| <= ra/(|bm|-rb) + |am| rb / (|bm| (|bm|-rb))
  const Mpfr am = abs_copy(a.mid_), bm = abs_copy(b.mid_);
  Mpfr den(kRad), t1(kRad), t2(kRad), t3(kRad);
  mpfr_sub(den.get(), bm.get(), b.rad_.get(), MPFR_RNDD);
  mpfr_div(t1.get(), a.rad_.get(), den.get(), MPFR_RNDU);
  mpfr_mul(t2.get(), am.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_mul(t3.get(), bm.get(), den.get(), MPFR_RNDD);
  mpfr_div(t2.get(), t2.get(), t3.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), t1.get(), t2.get(), MPFR_RNDU);
  add_rounding_error(r.rad_, r.mid_, t);
  return r;
}

RealBall RealBall::pow(unsigned e) const {
  RealBall result(1L, precision());
  RealBall base(*this);
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

RealBall RealBall::cos() const {
  RealBall r(precision());
  const int t = mpfr_cos(r.mid_.get(), mid_.get(), MPFR_RNDN);
  mpfr_set(r.rad_.get(), rad_.get(), MPFR_RNDU);  // |cos'| <= 1
  add_rounding_error(r.rad_, r.mid_, t);
  return r;
}

RealBall RealBall::sin() const {
  RealBall r(precision());
  const int t = mpfr_sin(r.mid_.get(), mid_.get(), MPFR_RNDN);
  mpfr_set(r.rad_.get(), rad_.get(), MPFR_RNDU);
  add_rounding_error(r.rad_, r.mid_, t);
  return r;
}

RealBall RealBall::widened(const Mpfr& extra) const {
  RealBall r(*this);
  mpfr_add(r.rad_.get(), r.rad_.get(), extra.get(), MPFR_RNDU);
  return r;
}

Mpfr ComplexBall::mag() const {
  Mpfr r = re_.mag();
  mpfr_add(r.get(), r.get(), im_.mag().get(), MPFR_RNDU);
  return r;
}

Mpfr ComplexBall::rad() const {
  Mpfr r(kRad);
  mpfr_max(r.get(), re_.rad().get(), im_.rad().get(), MPFR_RNDU);
  return r;
}

Mpfr distance_bound(const RealBall& a, const RealBall& b) {
  return (a - b).mag();
}

Mpfr distance_bound(const ComplexBall& a, const ComplexBall& b) {
  return (a - b).mag();
}

}  // namespace cpident
