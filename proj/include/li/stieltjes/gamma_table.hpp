#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "li/numeric/big.hpp"
#include "li/numeric/precision.hpp"

namespace li::stieltjes {

/// classical: zeta(s) = 1/(s-1) + sum (-1)^n gamma_n/n! (s-1)^n
/// bombieri_lagarias: zeta(s+1) = 1/s + sum gamma_n s^n
enum class Convention { classical, bombieri_lagarias };

std::string_view to_string(Convention convention);  // "classical" / "bl"
std::optional<Convention> parse_convention(std::string_view text);

/// Stieltjes constants gamma_0..gamma_{n_max} with declared valid decimal
/// digits per entry. values[0] is Euler's constant in both conventions.
struct GammaTable {
  Convention convention = Convention::bombieri_lagarias;
  std::vector<BigReal> values;
  std::vector<int> digits;

  int n_max() const { return static_cast<int>(values.size()) - 1; }
};

struct GammaOptions {
  double radius = 0.0;  // 0: gamma_radius(n_max)
  std::size_t node_count = 0;  // 0: choose from n_max and precision
};

/// Largest power of two <= max(1, n_max / (e ln n_max)). Coefficient n is
/// resolved to about working - 2 - log10 max|f| + n log10 r + log10 |gamma_n|
/// digits, so high indices need r well above 1.
double gamma_radius(int n_max);

/// Smallest power of two >= max(8, 4 (n_max + 1)) whose aliasing error stays
/// below 10^-working_digits under Matsuoka's bound
/// |gamma_n^classical| <= 1e-4 exp(n log log n), n >= 10.
std::size_t gamma_node_count(int n_max, int working_digits, double radius = 1.0);

/// Taylor coefficients of the entire function zeta(1+w) - 1/w, extracted from
/// one contour sample set on |w| = radius. Throws precision error when an
/// extracted coefficient has an imaginary residue above 10^-(digits/2) or the
/// trailing coefficients fail the aliasing check.
GammaTable gamma_bl(int n_max, const PrecisionContext& ctx, const GammaOptions& options = {});

/// gamma_n^BL = (-1)^n / n! * gamma_n^classical, with exact factorials.
GammaTable convert_convention(const GammaTable& table, Convention target);

/// Text cache:
///   li-gamma-cache v1
///   convention=<classical|bl>
///   count=<N>
///   <n>\t<value>\t<digits>      (N lines)
///   # checksum=fnv1a64:<hex>    (optional; covers the entry lines)
void save_cache(const GammaTable& table, const std::filesystem::path& path);
GammaTable load_cache(const std::filesystem::path& path);

}  // namespace li::stieltjes
