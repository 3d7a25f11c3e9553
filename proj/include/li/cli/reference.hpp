#pragma once

#include <span>
#include <string_view>

#include "li/numeric/big.hpp"

namespace li::cli {

/// Published 12-significant-digit values; empty strings where no value exists.
struct ReferenceRow {
  int n;
  std::string_view gamma_classical;
  std::string_view eta;
  std::string_view osc;
  std::string_view lambda;
};

std::span<const ReferenceRow> reference_rows();

/// |value - printed| <= half a unit in the last printed significant digit.
bool matches_printed(const BigReal& value, std::string_view printed);

/// value - printed, relative to one unit in the last printed digit.
double printed_ulps(const BigReal& value, std::string_view printed);

}  // namespace li::cli
