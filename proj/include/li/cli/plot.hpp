#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "li/core/li_coefficients.hpp"

namespace li::cli {

/// Static line chart of (n, value) points.
std::string render_svg(const std::string& title, std::span<const std::pair<int, double>> points);

/// trend.csv and oscillation.csv (columns n,value) for rows with n >= from,
/// plus trend.svg and oscillation.svg when svg is set. Returns the paths
/// written, none for an empty range.
std::vector<std::filesystem::path> write_plot_files(std::span<const core::LiRow> rows, int from,
                                                    const std::filesystem::path& out_dir, bool svg);

}  // namespace li::cli
