#include "li/cli/config.hpp"

#include <cstdlib>
#include <string>

#include "li/error.hpp"

namespace li::cli {

namespace {

constexpr std::string_view kCacheFile = "gamma-bl.cache";

std::optional<std::filesystem::path> env_path(const char* name) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::filesystem::path(value);
}

}  // namespace

ProfileDefaults profile_defaults(Profile profile) {
  return profile == Profile::paper ? ProfileDefaults{2000, 800} : ProfileDefaults{100, 160};
}

void validate(const RunConfig& config) {
  const int min_n = config.command == Command::gamma ? 0 : 1;
  if (config.n_max < min_n) {
    fail(ErrorKind::validation, "cli", "--n-max must be >= " + std::to_string(min_n) + ", got " + std::to_string(config.n_max));
  }
  if (config.digits < 15) fail(ErrorKind::validation, "cli", "--digits must be >= 15, got " + std::to_string(config.digits));
  if (config.guard && *config.guard < 0) fail(ErrorKind::validation, "cli", "--guard must be >= 0");
  if (config.plot_from < 1) fail(ErrorKind::validation, "cli", "--from must be >= 1");
}

PrecisionContext context_for(const RunConfig& config) {
  return PrecisionContext(config.digits, config.guard.value_or(PrecisionContext::default_guard(config.n_max)));
}

std::filesystem::path default_cache_path() {
  if (auto dir = env_path("LI_CACHE_DIR")) return *dir / kCacheFile;
  if (auto dir = env_path("XDG_CACHE_HOME")) return *dir / "li-coeffs" / kCacheFile;
  if (auto dir = env_path("HOME")) return *dir / ".cache" / "li-coeffs" / kCacheFile;
  return std::filesystem::path(kCacheFile);
}

std::string_view to_string(Command command) {
  switch (command) {
    case Command::gamma: return "gamma";
    case Command::lambda: return "lambda";
    case Command::verify: return "verify";
    case Command::plot: return "plot";
  }
  return "?";
}

}  // namespace li::cli
