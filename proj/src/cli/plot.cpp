#include "li/cli/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "li/error.hpp"

namespace li::cli {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 400;
constexpr double kMargin = 60;
constexpr int kPlotDigits = 20;

std::string num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  return buffer;
}

std::string label(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4g", value);
  return buffer;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::io, "cli", "cannot write " + path.string());
  out << contents;
  if (!out) fail(ErrorKind::io, "cli", "failed writing " + path.string());
}

}  // namespace

std::string render_svg(const std::string& title, std::span<const std::pair<int, double>> points) {
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
      << title << "</text>\n";
  if (points.empty()) {
    svg << "</svg>\n";
    return svg.str();
  }
  double x_min = points.front().first, x_max = points.back().first;
  double y_min = points.front().second, y_max = y_min;
  for (const auto& [n, v] : points) {
    y_min = std::min(y_min, v);
    y_max = std::max(y_max, v);
  }
  if (x_max == x_min) x_max = x_min + 1;
  if (y_max == y_min) {
    y_min -= 1;
    y_max += 1;
  }
  const auto sx = [&](double x) { return kMargin + (x - x_min) / (x_max - x_min) * (kWidth - 2 * kMargin); };
  const auto sy = [&](double y) { return kHeight - kMargin - (y - y_min) / (y_max - y_min) * (kHeight - 2 * kMargin); };

  svg << "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kHeight - kMargin) << "\" x2=\"" << num(kWidth - kMargin)
      << "\" y2=\"" << num(kHeight - kMargin) << "\"/>\n";
  svg << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kMargin) << "\" x2=\"" << num(kMargin) << "\" y2=\""
      << num(kHeight - kMargin) << "\"/>\n";
  svg << "</g>\n";
  svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<text x=\"" << num(kMargin) << "\" y=\"" << num(kHeight - kMargin + 18) << "\" text-anchor=\"middle\">"
      << label(x_min) << "</text>\n";
  svg << "<text x=\"" << num(kWidth - kMargin) << "\" y=\"" << num(kHeight - kMargin + 18)
      << "\" text-anchor=\"middle\">" << label(x_max) << "</text>\n";
  svg << "<text x=\"" << num(kMargin - 6) << "\" y=\"" << num(kHeight - kMargin) << "\" text-anchor=\"end\">"
      << label(y_min) << "</text>\n";
  svg << "<text x=\"" << num(kMargin - 6) << "\" y=\"" << num(kMargin + 4) << "\" text-anchor=\"end\">" << label(y_max)
      << "</text>\n";
  svg << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 16) << "\" text-anchor=\"middle\">n</text>\n";
  svg << "</g>\n";
  if (y_min < 0 && y_max > 0) {
    svg << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(kWidth - kMargin)
        << "\" y2=\"" << num(sy(0)) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  }
  svg << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != 0) svg << ' ';
    svg << num(sx(points[i].first)) << ',' << num(sy(points[i].second));
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

std::vector<std::filesystem::path> write_plot_files(std::span<const core::LiRow> rows, int from,
                                                    const std::filesystem::path& out_dir, bool svg) {
  std::vector<std::filesystem::path> written;
  std::string trend_csv = "n,value\n", osc_csv = "n,value\n";
  std::vector<std::pair<int, double>> trend_points, osc_points;
  for (const auto& row : rows) {
    if (row.n < from) continue;
    trend_csv += std::to_string(row.n) + ',' + row.trend.to_decimal(kPlotDigits) + '\n';
    osc_csv += std::to_string(row.n) + ',' + row.osc.to_decimal(kPlotDigits) + '\n';
    trend_points.emplace_back(row.n, row.trend.to_double());
    osc_points.emplace_back(row.n, row.osc.to_double());
  }
  if (trend_points.empty()) return written;

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) fail(ErrorKind::io, "cli", "cannot create " + out_dir.string() + ": " + ec.message());
  const auto emit = [&](const std::string& name, const std::string& contents) {
    const auto path = out_dir / name;
    write_file(path, contents);
    written.push_back(path);
  };
  emit("trend.csv", trend_csv);
  emit("oscillation.csv", osc_csv);
  if (svg) {
    emit("trend.svg", render_svg("trend part of lambda_n", trend_points));
    emit("oscillation.svg", render_svg("oscillatory part of lambda_n", osc_points));
  }
  return written;
}

}  // namespace li::cli
