#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>

namespace li {

/// Arbitrary-precision real backed by an mpfr_t. Binary operations produce a
/// result at the larger of the operand precisions, so precision is never
/// silently lowered.
class BigReal {
 public:
  explicit BigReal(mpfr_prec_t bits);
  BigReal(long value, mpfr_prec_t bits);
  BigReal(const mpz_class& value, mpfr_prec_t bits);
  BigReal(const mpq_class& value, mpfr_prec_t bits);

  /// Parses a decimal string ("-1.25e-3"). Returns false on malformed input.
  static bool parse(std::string_view text, mpfr_prec_t bits, BigReal& out);
  static BigReal from_double(double value, mpfr_prec_t bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  /// Copy rounded (or widened) to `bits`.
  BigReal with_precision(mpfr_prec_t bits) const;

  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);
  BigReal operator-() const;

  int sign() const noexcept { return mpfr_sgn(v_); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  /// log10 |x| as a double; -inf for zero.
  double log10_abs() const;

  /// `sig` significant digits, "d.ddde+XX" form.
  std::string to_scientific(int sig) const;
  /// Fixed notation with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;
  /// Fixed notation for moderate magnitudes, scientific otherwise; `sig`
  /// significant digits either way.
  std::string to_decimal(int sig) const;

 private:
  mpfr_t v_;
};

BigReal operator+(BigReal lhs, const BigReal& rhs);
BigReal operator-(BigReal lhs, const BigReal& rhs);
BigReal operator*(BigReal lhs, const BigReal& rhs);
BigReal operator/(BigReal lhs, const BigReal& rhs);
BigReal operator*(BigReal lhs, long rhs);
BigReal operator/(BigReal lhs, long rhs);

bool operator==(const BigReal& a, const BigReal& b);
bool operator<(const BigReal& a, const BigReal& b);
inline bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
inline bool operator<=(const BigReal& a, const BigReal& b) { return !(b < a); }
inline bool operator>=(const BigReal& a, const BigReal& b) { return !(a < b); }

BigReal abs(BigReal x);
BigReal sqrt(BigReal x);
BigReal exp(BigReal x);
BigReal log(BigReal x);
BigReal sin(BigReal x);
BigReal cos(BigReal x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& exponent);
BigReal pow(const BigReal& base, long exponent);

BigReal const_pi(mpfr_prec_t bits);
BigReal const_euler(mpfr_prec_t bits);
BigReal log_ui(unsigned long k, mpfr_prec_t bits);
/// 10^e at the given precision.
BigReal pow10(long e, mpfr_prec_t bits);

/// x + iy with both parts at a common precision.
class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t bits) : re_(bits), im_(bits) {}
  BigComplex(BigReal re, BigReal im);
  explicit BigComplex(BigReal re);

  static BigComplex from_polar(const BigReal& modulus, const BigReal& angle);

  const BigReal& re() const noexcept { return re_; }
  const BigReal& im() const noexcept { return im_; }
  BigReal& re() noexcept { return re_; }
  BigReal& im() noexcept { return im_; }
  mpfr_prec_t precision() const noexcept { return re_.precision(); }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex& operator*=(const BigReal& rhs);
  BigComplex& operator/=(const BigReal& rhs);
  BigComplex operator-() const;

  /// Writes a*b into *this without temporaries beyond `scratch`.
  void assign_product(const BigComplex& a, const BigComplex& b, BigReal& scratch);

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }

 private:
  BigReal re_;
  BigReal im_;
};

BigComplex operator+(BigComplex lhs, const BigComplex& rhs);
BigComplex operator-(BigComplex lhs, const BigComplex& rhs);
BigComplex operator*(BigComplex lhs, const BigComplex& rhs);
BigComplex operator/(BigComplex lhs, const BigComplex& rhs);
BigComplex operator*(BigComplex lhs, const BigReal& rhs);
BigComplex operator/(BigComplex lhs, const BigReal& rhs);

BigComplex conj(BigComplex z);
BigReal abs(const BigComplex& z);
BigReal norm(const BigComplex& z);  // |z|^2
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal branch, arg in (-pi, pi].
BigComplex log(const BigComplex& z);
BigComplex reciprocal(const BigComplex& z);

}  // namespace li
