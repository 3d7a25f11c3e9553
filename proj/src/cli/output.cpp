#include "li/cli/output.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace li::cli {

FormattedRow format_row(const core::LiRow& row) {
  int decimals = row.est_digits;
  if (!row.total.is_zero()) {
    decimals = row.est_digits - 1 - static_cast<int>(std::floor(row.total.log10_abs()));
  }
  decimals = std::max(decimals, 0);
  return FormattedRow{row.n, row.trend.to_fixed(decimals), row.osc.to_fixed(decimals), row.total.to_fixed(decimals),
                      row.est_digits};
}

void write_rows_csv(std::ostream& out, std::span<const core::LiRow> rows) {
  out << "n,trend,oscillation,lambda,est_digits\n";
  for (const auto& row : rows) {
    const auto f = format_row(row);
    out << f.n << ',' << f.trend << ',' << f.osc << ',' << f.lambda << ',' << f.est_digits << '\n';
  }
}

void write_rows_json(std::ostream& out, std::span<const core::LiRow> rows) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    const auto f = format_row(row);
    array.push_back({{"n", f.n}, {"trend", f.trend}, {"oscillation", f.osc}, {"lambda", f.lambda}, {"est_digits", f.est_digits}});
  }
  out << array.dump(2) << '\n';
}

namespace {

std::string gamma_string(const stieltjes::GammaTable& table, std::size_t n) {
  return table.values[n].to_decimal(std::max(table.digits[n], 1));
}

}  // namespace

void write_gamma_csv(std::ostream& out, const stieltjes::GammaTable& table) {
  out << "n,gamma,digits\n";
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    out << n << ',' << gamma_string(table, n) << ',' << table.digits[n] << '\n';
  }
}

void write_gamma_json(std::ostream& out, const stieltjes::GammaTable& table) {
  auto values = nlohmann::ordered_json::array();
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    values.push_back({{"n", n}, {"gamma", gamma_string(table, n)}, {"digits", table.digits[n]}});
  }
  nlohmann::ordered_json doc{{"convention", std::string(stieltjes::to_string(table.convention))}, {"values", values}};
  out << doc.dump(2) << '\n';
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::validation:
    case ErrorKind::format:
    case ErrorKind::convention:
    case ErrorKind::checksum:
    case ErrorKind::io:
      return 1;
    case ErrorKind::verification:
      return 3;
    default:
      return 2;
  }
}

std::string diagnostic(const Error& error) {
  std::string line = "li-error: " + std::string(to_string(error.kind())) + ": " + error.module() + ": " + error.what();
  std::replace(line.begin(), line.end(), '\n', ' ');
  return line;
}

}  // namespace li::cli
