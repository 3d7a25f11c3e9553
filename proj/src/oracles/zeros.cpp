#include "li/oracles/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

#include "li/error.hpp"
#include "li/numeric/parallel.hpp"

namespace li::oracles {

namespace {

constexpr double kFirstOrdinate = 14.134725;
constexpr int kParseDigits = 40;

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

// N0(t) = (t/2pi) log(t/2pi) - t/2pi + 7/8
double smooth_count(double t) {
  const double x = t / (2.0 * std::numbers::pi);
  return x * std::log(x) - x + 0.875;
}

// Trudgian: |N(t) - N0(t)| <= 0.112 log t + 0.278 log log t + 2.51 + 0.2/t, t >= e
double count_error(double t) {
  return 0.112 * std::log(t) + 0.278 * std::log(std::log(t)) + 2.51 + 0.2 / t;
}

}  // namespace

ZeroTable parse_zero_table(std::istream& in) {
  ZeroTable table;
  const mpfr_prec_t bits = bits_for_digits(kParseDigits);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    BigReal value(bits);
    if (!BigReal::parse(line, bits, value) || value.sign() <= 0) {
      fail(ErrorKind::format, "oracles", "zero table line " + std::to_string(line_no) + ": unparsable ordinate '" + line + "'");
    }
    if (!table.ordinates.empty() && !(table.ordinates.back() < value)) {
      fail(ErrorKind::format, "oracles",
           "zero table line " + std::to_string(line_no) + ": ordinates not strictly ascending");
    }
    const auto dot = line.find('.');
    if (dot != std::string::npos) {
      const auto exponent = line.find_first_of("eE", dot);
      const auto end = exponent == std::string::npos ? line.size() : exponent;
      table.source_digits = std::max(table.source_digits, static_cast<int>(end - dot - 1));
    }
    table.ordinates.push_back(std::move(value));
  }
  if (table.ordinates.empty()) fail(ErrorKind::format, "oracles", "zero table is empty");
  if (std::abs(table.ordinates.front().to_double() - kFirstOrdinate) > 1e-3) {
    fail(ErrorKind::format, "oracles",
         "first ordinate " + table.ordinates.front().to_decimal(12) + " is not the first zeta zero");
  }
  return table;
}

ZeroTable load_zero_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "oracles", "cannot open zero table " + path.string());
  return parse_zero_table(in);
}

ZeroTable truncate(const ZeroTable& zeros, std::size_t count) {
  ZeroTable out;
  out.source_digits = zeros.source_digits;
  const std::size_t keep = std::min(count, zeros.size());
  out.ordinates.assign(zeros.ordinates.begin(), zeros.ordinates.begin() + static_cast<std::ptrdiff_t>(keep));
  return out;
}

double zero_tail_bound(int n, double last_ordinate, std::size_t count) {
  if (n == 0) return 0.0;
  const double t = last_ordinate;
  const double log_t = std::log(t);
  // sum_{t_k > T} 1/t_k^2 = -N(T)/T^2 + 2 int_T^inf N(t)/t^3 dt with N(T) = count,
  // N bounded above by N0 + E and both integrals done by parts.
  const double surplus = std::max(0.0, smooth_count(t) + count_error(t) - static_cast<double>(count)) / (t * t);
  const double density = (std::log(t / (2.0 * std::numbers::pi)) + 1.0) / (2.0 * std::numbers::pi * t);
  const double error_growth = (0.112 + 0.278 / log_t) / (2.0 * t * t);
  return static_cast<double>(n) * static_cast<double>(n) * (surplus + density + error_growth);
}

ZeroSum lambda_from_zeros(int n, const ZeroTable& zeros, const PrecisionContext& ctx) {
  if (n < 0) fail(ErrorKind::validation, "oracles", "n must be >= 0");
  if (zeros.ordinates.empty()) fail(ErrorKind::validation, "oracles", "zero table is empty");
  const mpfr_prec_t bits = ctx.bits();
  if (n == 0) return ZeroSum{BigReal(bits), BigReal(bits)};

  std::vector<BigReal> terms(zeros.size(), BigReal(bits));
  parallel_for(zeros.size(), [&](std::size_t k) {
    const BigReal t = zeros.ordinates[k].with_precision(bits);
    BigReal s = sin(atan2(BigReal(1, bits), t * 2L) * static_cast<long>(n));
    terms[k] = s * s * 4L;
  });
  BigReal value(bits);
  for (const auto& term : terms) value += term;  // fixed order
  const double bound = zero_tail_bound(n, zeros.ordinates.back().to_double(), zeros.size());
  return ZeroSum{std::move(value), BigReal::from_double(bound, bits)};
}

}  // namespace li::oracles
