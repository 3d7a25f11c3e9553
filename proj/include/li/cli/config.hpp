#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "li/numeric/precision.hpp"
#include "li/stieltjes/gamma_table.hpp"

namespace li::cli {

enum class Command { gamma, lambda, verify, plot };
enum class OutputFormat { csv, json };
enum class Profile { desk, paper };

struct ProfileDefaults {
  int n_max;
  int digits;
};

/// desk: n_max 100, 160 digits. paper: n_max 2000, 800 digits (full scale,
/// far beyond desk runtime).
ProfileDefaults profile_defaults(Profile profile);

struct RunConfig {
  Command command = Command::lambda;
  Profile profile = Profile::desk;
  int n_max = 100;
  int digits = 160;
  std::optional<int> guard;
  std::filesystem::path cache_path;
  bool use_cache = true;
  std::optional<std::filesystem::path> zeros_path;
  OutputFormat format = OutputFormat::csv;
  stieltjes::Convention convention = stieltjes::Convention::classical;
  // plot
  std::filesystem::path out_dir = ".";
  int plot_from = 1;
  bool svg = false;
};

/// Throws validation error: digits >= 15, guard >= 0, n_max >= 1 (>= 0 for
/// the gamma command).
void validate(const RunConfig& config);

PrecisionContext context_for(const RunConfig& config);

/// $LI_CACHE_DIR/gamma-bl.cache, else $XDG_CACHE_HOME/li-coeffs/..., else
/// ~/.cache/li-coeffs/..., else ./gamma-bl.cache.
std::filesystem::path default_cache_path();

std::string_view to_string(Command command);

}  // namespace li::cli
