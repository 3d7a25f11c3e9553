#include "li/numeric/big.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "li/numeric/precision.hpp"
#include "li/error.hpp"

namespace li {

namespace {

std::string take_mpfr_string(char* buffer) {
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

mpfr_prec_t wider(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}

// Raises the precision of `x` to at least `bits`, keeping its value.
void widen(BigReal& x, mpfr_prec_t bits) {
  if (x.precision() < bits) mpfr_prec_round(x.raw(), bits, MPFR_RNDN);
}

}  // namespace

// --- PrecisionContext -------------------------------------------------------

PrecisionContext::PrecisionContext(int digits, int guard) : digits_(digits), guard_(guard) {
  if (digits < 15) fail(ErrorKind::validation, "numeric", "digits must be >= 15, got " + std::to_string(digits));
  if (guard < 0) fail(ErrorKind::validation, "numeric", "guard must be >= 0, got " + std::to_string(guard));
}

int PrecisionContext::default_guard(int n_max) {
  return static_cast<int>(std::ceil(0.35 * std::max(n_max, 0))) + 20;
}

PrecisionContext PrecisionContext::for_index(int digits, int n_max) {
  return PrecisionContext(digits, default_guard(n_max));
}

mpfr_prec_t PrecisionContext::bits() const noexcept { return bits_for_digits(working_digits()); }

mpfr_prec_t bits_for_digits(int decimal_digits) {
  return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.321928094887362)) + 8;
}

// --- BigReal ----------------------------------------------------------------

BigReal::BigReal(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

bool BigReal::parse(std::string_view text, mpfr_prec_t bits, BigReal& out) {
  std::string s(text);
  BigReal tmp(bits);
  if (s.empty() || mpfr_set_str(tmp.v_, s.c_str(), 10, MPFR_RNDN) != 0) return false;
  if (!tmp.is_finite()) return false;
  out = std::move(tmp);
  return true;
}

BigReal BigReal::from_double(double value, mpfr_prec_t bits) {
  BigReal out(bits);
  mpfr_set_d(out.v_, value, MPFR_RNDN);
  return out;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    if (precision() != other.precision()) mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::with_precision(mpfr_prec_t bits) const {
  BigReal out(bits);
  mpfr_set(out.v_, v_, MPFR_RNDN);
  return out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen(*this, rhs.precision());
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen(*this, rhs.precision());
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen(*this, rhs.precision());
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  widen(*this, rhs.precision());
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal out(*this);
  mpfr_neg(out.v_, out.v_, MPFR_RNDN);
  return out;
}

double BigReal::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, v_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
}

std::string BigReal::to_scientific(int sig) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", std::max(sig - 1, 0), v_);
  return take_mpfr_string(buffer);
}

std::string BigReal::to_fixed(int decimals) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rf", std::max(decimals, 0), v_);
  return take_mpfr_string(buffer);
}

std::string BigReal::to_decimal(int sig) const {
  sig = std::max(sig, 1);
  if (is_zero()) return to_fixed(sig - 1);
  // Decide the layout from the rounded scientific form so that a value that
  // rounds up to the next power of ten is laid out consistently.
  const std::string sci = to_scientific(sig);
  const long exponent = std::stol(sci.substr(sci.find('e') + 1));
  if (exponent < -5 || exponent >= 21) return sci;
  return to_fixed(static_cast<int>(sig - 1 - exponent));
}

BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
BigReal operator*(BigReal lhs, long rhs) { return lhs *= rhs; }
BigReal operator/(BigReal lhs, long rhs) { return lhs /= rhs; }

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }

BigReal abs(BigReal x) {
  mpfr_abs(x.raw(), x.raw(), MPFR_RNDN);
  return x;
}

BigReal sqrt(BigReal x) {
  mpfr_sqrt(x.raw(), x.raw(), MPFR_RNDN);
  return x;
}

BigReal exp(BigReal x) {
  mpfr_exp(x.raw(), x.raw(), MPFR_RNDN);
  return x;
}

BigReal log(BigReal x) {
  mpfr_log(x.raw(), x.raw(), MPFR_RNDN);
  return x;
}

BigReal sin(BigReal x) {
  mpfr_sin(x.raw(), x.raw(), MPFR_RNDN);
  return x;
}

BigReal cos(BigReal x) {
  mpfr_cos(x.raw(), x.raw(), MPFR_RNDN);
  return x;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal out(wider(y, x));
  mpfr_atan2(out.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
  BigReal out(wider(base, exponent));
  mpfr_pow(out.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& base, long exponent) {
  BigReal out(base.precision());
  mpfr_pow_si(out.raw(), base.raw(), exponent, MPFR_RNDN);
  return out;
}

BigReal const_pi(mpfr_prec_t bits) {
  BigReal out(bits);
  mpfr_const_pi(out.raw(), MPFR_RNDN);
  return out;
}

BigReal const_euler(mpfr_prec_t bits) {
  BigReal out(bits);
  mpfr_const_euler(out.raw(), MPFR_RNDN);
  return out;
}

BigReal log_ui(unsigned long k, mpfr_prec_t bits) {
  BigReal out(bits);
  mpfr_log_ui(out.raw(), k, MPFR_RNDN);
  return out;
}

BigReal pow10(long e, mpfr_prec_t bits) {
  BigReal out(bits);
  mpfr_set_ui(out.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(out.raw(), out.raw(), e, MPFR_RNDN);
  return out;
}

// --- BigComplex -------------------------------------------------------------

BigComplex::BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {
  const mpfr_prec_t bits = std::max(re_.precision(), im_.precision());
  widen(re_, bits);
  widen(im_, bits);
}

BigComplex::BigComplex(BigReal re) : re_(std::move(re)), im_(re_.precision()) {}

BigComplex BigComplex::from_polar(const BigReal& modulus, const BigReal& angle) {
  const mpfr_prec_t bits = wider(modulus, angle);
  BigComplex out(bits);
  mpfr_sin_cos(out.im_.raw(), out.re_.raw(), angle.raw(), MPFR_RNDN);
  out.re_ *= modulus;
  out.im_ *= modulus;
  return out;
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

void BigComplex::assign_product(const BigComplex& a, const BigComplex& b, BigReal& scratch) {
  // Aliasing-safe: results are staged in `scratch` and a local before writing.
  const mpfr_prec_t bits = std::max({precision(), a.precision(), b.precision()});
  widen(re_, bits);
  widen(im_, bits);
  widen(scratch, bits);
  BigReal real_part(bits);
  mpfr_mul(real_part.raw(), a.re_.raw(), b.re_.raw(), MPFR_RNDN);
  mpfr_mul(scratch.raw(), a.im_.raw(), b.im_.raw(), MPFR_RNDN);
  mpfr_sub(real_part.raw(), real_part.raw(), scratch.raw(), MPFR_RNDN);
  mpfr_mul(scratch.raw(), a.re_.raw(), b.im_.raw(), MPFR_RNDN);
  mpfr_fma(im_.raw(), a.im_.raw(), b.re_.raw(), scratch.raw(), MPFR_RNDN);
  mpfr_swap(re_.raw(), real_part.raw());
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  BigReal scratch(precision());
  assign_product(*this, rhs, scratch);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  return *this *= reciprocal(rhs);
}

BigComplex& BigComplex::operator*=(const BigReal& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigReal& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

BigComplex BigComplex::operator-() const { return BigComplex(-re_, -im_); }

BigComplex operator+(BigComplex lhs, const BigComplex& rhs) { return lhs += rhs; }
BigComplex operator-(BigComplex lhs, const BigComplex& rhs) { return lhs -= rhs; }
BigComplex operator*(BigComplex lhs, const BigComplex& rhs) { return lhs *= rhs; }
BigComplex operator/(BigComplex lhs, const BigComplex& rhs) { return lhs /= rhs; }
BigComplex operator*(BigComplex lhs, const BigReal& rhs) { return lhs *= rhs; }
BigComplex operator/(BigComplex lhs, const BigReal& rhs) { return lhs /= rhs; }

BigComplex conj(BigComplex z) {
  z.im() = -z.im();
  return z;
}

BigReal norm(const BigComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

BigReal abs(const BigComplex& z) {
  BigReal out(z.precision());
  mpfr_hypot(out.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
  return out;
}

BigReal arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

BigComplex exp(const BigComplex& z) { return BigComplex::from_polar(exp(z.re()), z.im()); }

BigComplex log(const BigComplex& z) { return BigComplex(log(abs(z)), arg(z)); }

BigComplex reciprocal(const BigComplex& z) {
  const BigReal n = norm(z);
  return BigComplex(z.re() / n, -(z.im() / n));
}

}  // namespace li
