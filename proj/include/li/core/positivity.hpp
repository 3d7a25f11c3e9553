#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "li/core/li_coefficients.hpp"

namespace li::core {

struct PositivityReport {
  std::size_t rows_checked = 0;
  std::vector<int> negative_total;      // n with lambda_n < 0
  std::vector<int> osc_exceeds_trend;   // n with -osc_n > trend_n
  std::optional<BigReal> min_margin;    // min over n of trend + osc
  int min_margin_n = 0;

  bool clean() const { return negative_total.empty() && osc_exceeds_trend.empty(); }
};

PositivityReport positivity_report(std::span<const LiRow> rows);

/// Caveat printed with every positivity report.
std::string_view positivity_caveat();

}  // namespace li::core
