#pragma once

#include <mpfr.h>

namespace li {

/// Requested decimal precision plus guard digits. Immutable once built.
class PrecisionContext {
 public:
  /// Throws validation error unless digits >= 15 and guard >= 0.
  PrecisionContext(int digits, int guard);

  /// Guard sized for binomial-sum cancellation up to index n_max:
  /// ceil(0.35 * n_max) + 20.
  static PrecisionContext for_index(int digits, int n_max);
  static int default_guard(int n_max);

  int digits() const noexcept { return digits_; }
  int guard() const noexcept { return guard_; }
  int working_digits() const noexcept { return digits_ + guard_; }
  /// Binary precision that carries working_digits() decimal digits.
  mpfr_prec_t bits() const noexcept;

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int digits_;
  int guard_;
};

mpfr_prec_t bits_for_digits(int decimal_digits);

}  // namespace li
