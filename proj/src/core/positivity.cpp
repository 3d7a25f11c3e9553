#include "li/core/positivity.hpp"

namespace li::core {

PositivityReport positivity_report(std::span<const LiRow> rows) {
  PositivityReport report;
  report.rows_checked = rows.size();
  for (const LiRow& row : rows) {
    if (row.total.sign() < 0) report.negative_total.push_back(row.n);
    if (-row.osc > row.trend) report.osc_exceeds_trend.push_back(row.n);
    if (!report.min_margin || row.total < *report.min_margin) {
      report.min_margin = row.total;
      report.min_margin_n = row.n;
    }
  }
  return report;
}

std::string_view positivity_caveat() {
  return "Note (after J. Oesterle): positivity of finitely many lambda_n is expected "
         "whether or not RH holds, since a zero off the critical line at height T only "
         "makes lambda_n negative for n of order T^2. These values are not evidence for RH.";
}

}  // namespace li::core
