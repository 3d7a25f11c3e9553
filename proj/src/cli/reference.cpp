#include "li/cli/reference.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "li/error.hpp"

namespace li::cli {

namespace {

constexpr ReferenceRow kRows[] = {
    {0, "+0.577215664902", "-0.577215664902", "", ""},
    {1, "-0.0728158454837", "+0.187546232840", "0.577215664902", "0.0230957089661"},
    {2, "-0.00969036319287", "-0.0516886320332", "0.966885096963", "0.0923457352280"},
    {3, "+0.00205383442030", "+0.0147516588255", "1.22069692822", "0.207638920554"},
    {4, "+0.00232537006547", "-0.00452447788850", "1.37558813187", "0.368790479492"},
    {5, "+0.000793323817301", "+0.00144679520453", "1.45826850020", "0.575542714461"},
    {6, "-0.000238769345430", "-0.000471544078185", "1.48829832721", "0.827566012282"},
    {7, "-0.000527289567058", "+0.000155180294164", "1.48019084024", "1.12446011757"},
    {8, "-0.000352123353803", "-0.0000513452121181", "1.44485574412", "1.46575567715"},
    {9, "-0.0000343947744181", "+0.0000170413570471", "1.39059640679", "1.85091604838"},
    {10, "+0.000205332814909", "-5.66605092104e-6", "1.32380368370", "2.27933936319"},
    {11, "+0.000270184439544", "+1.88584861186e-6", "1.24944277582", "2.75036083822"},
    {12, "+0.000167272912105", "-6.28055422786e-7", "1.17139824694", "3.26325532062"},
    {13, "-0.0000274638066038", "+2.09240519074e-7", "1.09272131711", "3.81724005785"},
    {14, "-0.000209209262059", "-6.97247031237e-8", "1.01580941259", "4.41147767868"},
    {15, "-0.000283468655320", "+2.32371573798e-8", "0.942538421086", "5.04507937203"},
    {100, "-4.25340157171e17", "-6.46775072494e-49", "0.628752815248", "118.603775377"},
    {500, "-1.16550527223e204", "-9.16750985401e-240", "2.66350209695", "991.900092992"},
};

// Exponent of the last significant digit written in `printed`.
int last_digit_exponent(std::string_view printed) {
  std::string_view mantissa = printed;
  int exponent = 0;
  if (const auto e = printed.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = printed.substr(0, e);
    exponent = std::stoi(std::string(printed.substr(e + 1)));
  }
  const auto dot = mantissa.find('.');
  const int fraction = dot == std::string_view::npos ? 0 : static_cast<int>(mantissa.size() - dot - 1);
  return exponent - fraction;
}

}  // namespace

std::span<const ReferenceRow> reference_rows() { return kRows; }

double printed_ulps(const BigReal& value, std::string_view printed) {
  const mpfr_prec_t bits = std::max<mpfr_prec_t>(value.precision(), 128);
  BigReal target(bits);
  if (!BigReal::parse(printed, bits, target)) {
    fail(ErrorKind::format, "cli", "unparsable reference value '" + std::string(printed) + "'");
  }
  BigReal diff = value.with_precision(bits) - target;
  diff /= pow10(last_digit_exponent(printed), bits);
  return diff.to_double();
}

bool matches_printed(const BigReal& value, std::string_view printed) {
  return std::abs(printed_ulps(value, printed)) <= 0.5;
}

}  // namespace li::cli
