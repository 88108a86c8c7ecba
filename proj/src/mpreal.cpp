#include "septic/mpreal.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace septic {

namespace {

thread_local long tlsPrecision = 256;

}  // namespace

PrecisionScope::PrecisionScope(long bits) : saved_(tlsPrecision) {
  if (bits < MPFR_PREC_MIN) bits = MPFR_PREC_MIN;
  tlsPrecision = bits;
}

PrecisionScope::~PrecisionScope() { tlsPrecision = saved_; }

long PrecisionScope::current() { return tlsPrecision; }

long PrecisionScope::bitsForDigits(long digits) {
  return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 16;
}

Real::Real() {
  mpfr_init2(v_, tlsPrecision);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v) {
  mpfr_init2(v_, tlsPrecision);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v) {
  mpfr_init2(v_, tlsPrecision);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const BigInt& v) {
  mpfr_init2(v_, tlsPrecision);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const BigRat& v) {
  mpfr_init2(v_, tlsPrecision);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi() {
  Real out;
  mpfr_const_pi(out.v_, MPFR_RNDN);
  return out;
}

Real& Real::operator+=(const Real& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& a) {
  Real out(a);
  mpfr_neg(out.v_, out.v_, MPFR_RNDN);
  return out;
}

BigInt Real::round() const {
  mpfr_t r;
  mpfr_init2(r, mpfr_get_prec(v_));
  mpfr_round(r, v_);
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), r, MPFR_RNDN);
  mpfr_clear(r);
  return out;
}

double Real::log10Abs() const {
  if (isZero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0);
}

std::string Real::toString(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real abs(const Real& x) {
  Real out(x);
  mpfr_abs(out.get(), out.get(), MPFR_RNDN);
  return out;
}

Real sqrt(const Real& x) {
  Real out;
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real cos(const Real& x) {
  Real out;
  mpfr_cos(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real sin(const Real& x) {
  Real out;
  mpfr_sin(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real hypot(const Real& x, const Real& y) {
  Real out;
  mpfr_hypot(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

Real pow10(long e) {
  Real out;
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  return out;
}

Complex Complex::polar(const Real& radius, const Real& angle) {
  Real c;
  Real s;
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  return {radius * c, radius * s};
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  const Real d = o.norm();
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Real Complex::norm() const { return re * re + im * im; }

Real Complex::abs() const { return hypot(re, im); }

}  // namespace septic
