#pragma once

#include <ostream>
#include <span>
#include <string>

#include "li/core/li_coefficients.hpp"
#include "li/error.hpp"
#include "li/stieltjes/gamma_table.hpp"

namespace li::cli {

struct FormattedRow {
  int n;
  std::string trend;
  std::string osc;
  std::string lambda;
  int est_digits;
};

/// All three values in fixed notation at the absolute precision implied by
/// est_digits significant digits of lambda_n.
FormattedRow format_row(const core::LiRow& row);

void write_rows_csv(std::ostream& out, std::span<const core::LiRow> rows);
void write_rows_json(std::ostream& out, std::span<const core::LiRow> rows);

/// Table in its own convention, each value at its declared digits.
void write_gamma_csv(std::ostream& out, const stieltjes::GammaTable& table);
void write_gamma_json(std::ostream& out, const stieltjes::GammaTable& table);

/// 0 success, 1 validation (bad flags, configuration or input files),
/// 2 computation, 3 verification failure.
int exit_code(ErrorKind kind);

/// Single line: "li-error: <kind>: <module>: <message>".
std::string diagnostic(const Error& error);

}  // namespace li::cli
