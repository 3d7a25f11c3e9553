#include <atomic>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "li/numeric/big.hpp"
#include "li/numeric/contour.hpp"
#include "li/numeric/exact.hpp"
#include "li/numeric/parallel.hpp"
#include "li/numeric/precision.hpp"
#include "li/numeric/special.hpp"
#include "oracles.hpp"

using namespace li;
using li::test::abs_error_log10;
using li::test::big;
using li::test::rel_error_log10;
using li::test::throws_kind;

TEST_SUITE("numeric") {

TEST_CASE("precision context") {
  const PrecisionContext ctx(100, 20);
  CHECK(ctx.working_digits() == 120);
  CHECK(ctx.bits() >= static_cast<mpfr_prec_t>(std::ceil(120 * 3.3219)));
  CHECK(PrecisionContext::default_guard(100) == 55);
  CHECK(PrecisionContext::default_guard(1) == 21);
  CHECK(PrecisionContext::for_index(160, 100).guard() == 55);
  CHECK(throws_kind([] { PrecisionContext(14, 0); }, ErrorKind::validation));
  CHECK(throws_kind([] { PrecisionContext(50, -1); }, ErrorKind::validation));
}

TEST_CASE("big real arithmetic keeps the wider precision") {
  const BigReal narrow(3, 64);
  const BigReal wide(7, 512);
  CHECK((narrow + wide).precision() == 512);
  CHECK((wide * narrow).precision() == 512);
  CHECK((narrow / wide).precision() == 512);

  BigReal x(2);
  CHECK_FALSE(BigReal::parse("1.2.3", 128, x));
  CHECK_FALSE(BigReal::parse("", 128, x));
  REQUIRE(BigReal::parse("-1.25e-3", 128, x));
  CHECK(x.to_double() == doctest::Approx(-0.00125));
  CHECK(BigReal(1, 128).to_fixed(3) == "1.000");
  CHECK(big("-0.0123456").to_scientific(3) == "-1.23e-02");
}

TEST_CASE("big complex log and exp are inverse on the principal branch") {
  const BigComplex z = big("-0.75", "2.5", 80);
  const BigComplex back = exp(log(z));
  CHECK(abs_error_log10(back, z) < -75);
  const BigReal pi = const_pi(bits_for_digits(80));
  CHECK(arg(big("-1", "0", 80)) == pi);
}

TEST_CASE("bernoulli numbers agree with the Akiyama-Tanigawa transform") {
  for (unsigned k = 0; k <= 60; ++k) CHECK(bernoulli(k) == test::bernoulli_akiyama(k));
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
}

TEST_CASE("binomials and factorials are exact") {
  for (unsigned n = 0; n <= 80; ++n) {
    for (unsigned k = 0; k <= n + 1; ++k) CHECK(binomial(n, k) == test::pascal_binomial(n, k));
  }
  CHECK(factorial(20) == mpz_class("2432902008176640000"));
  CHECK(factorial(0) == 1);
}

TEST_CASE("zeta at even integers matches the Bernoulli closed form") {
  const PrecisionContext ctx(80, 20);
  for (long k = 1; k <= 50; ++k) {
    const BigComplex em = zeta(BigComplex(BigReal(2 * k, ctx.bits())), ctx);
    // zeta(2k) = (-1)^{k+1} B_2k (2 pi)^2k / (2 (2k)!)
    const mpfr_prec_t bits = ctx.bits();
    BigReal closed(mpq_class(bernoulli(2 * k) / (2 * factorial(2 * k))), bits);
    closed *= pow(const_pi(bits) * 2, 2 * k);
    if (k % 2 == 0) closed = -closed;
    CHECK(rel_error_log10(em.re(), closed) < -(ctx.digits() - 5));
    CHECK(em.im().is_zero());
  }
}

TEST_CASE("zeta_int agrees with mpfr") {
  const PrecisionContext ctx(60, 10);
  for (long j : {2L, 3L, 5L, 10L, 31L, 64L}) {
    BigReal ref(ctx.bits());
    mpfr_zeta_ui(ref.raw(), static_cast<unsigned long>(j), MPFR_RNDN);
    CHECK(rel_error_log10(zeta_int(j, ctx), ref) < -65);
  }
  CHECK(throws_kind([&] { zeta_int(1, ctx); }, ErrorKind::domain));
}

TEST_CASE("zeta off the axis matches the Borwein series") {
  const PrecisionContext ctx(50, 10);
  const BigComplex points[] = {big("1.3", "0.7"), big("0.25", "-0.5"), big("2", "30"), big("0.5", "21.022039638771554993")};
  for (const auto& s : points) {
    const BigComplex a = zeta(s, ctx);
    const BigComplex b = test::zeta_borwein(s, 55);
    CHECK(abs_error_log10(a, b) < -50);
  }
}

TEST_CASE("zeta matches frozen high-precision values") {
  struct Case {
    const char* sre;
    const char* sim;
    const char* re;
    const char* im;
  };
  // frozen from an independent 60-digit evaluation
  const Case cases[] = {
      {"1.3", "0.7", "1.1183784209834798369894372619534451889556208176842", "-1.1579395615419117268677596321360298637709902768749"},
      {"-2.5", "3.25", "0.069570072627686667853158315831629776991866039944635", "0.1669726902601108840569352022651599368800399287257"},
      {"3", "-40", "0.93260914392849836056952879249381646231806167627518", "0.063757506071177590191475820769356611608865537442379"},
      {"0.25", "-0.5", "-0.40208409826939904571310937713960311428900956986872", "0.57563515643810757254037685238835248682398405905442"},
  };
  const PrecisionContext ctx(45, 5);
  for (const auto& c : cases) {
    const BigComplex s = big(c.sre, c.sim);
    CHECK(abs_error_log10(zeta(s, ctx), big(c.re, c.im)) < -45);
  }
}

TEST_CASE("zeta pole and cutoff overrides") {
  const PrecisionContext ctx(30, 5);
  CHECK(throws_kind([&] { zeta(BigComplex(BigReal(1, ctx.bits())), ctx); }, ErrorKind::pole));
  ZetaOptions starved;
  starved.terms = 2;
  starved.corrections = 1;
  CHECK(throws_kind([&] { zeta(big("0.5", "100"), ctx, starved); }, ErrorKind::precision));
  const auto plan = plan_euler_maclaurin(0.5, 100.0, 40);
  CHECK(plan.log10_bound < -40);
  CHECK(plan.terms > 100 / (2 * 3.14159265));
}

TEST_CASE("log gamma matches frozen values and mpfr") {
  const PrecisionContext ctx(45, 5);
  struct Case {
    const char* sre;
    const char* sim;
    const char* re;
    const char* im;
  };
  const Case cases[] = {
      {"1.3", "0.7", "-0.36553390021897028558867760886503817127014672177846", "-0.058052825203875532897856765110190131190374629089454"},
      {"0.2", "-5.5", "-8.2315999129017509972960893882368189605889252487355", "-3.4042656281806209627794728125359736827127553979312"},
      {"12.5", "30", "-5.0853503393553046934827470744908171440654002157761", "88.546898270819313390185690254928431925655087698874"},
  };
  for (const auto& c : cases) {
    CHECK(abs_error_log10(log_gamma(big(c.sre, c.sim), ctx), big(c.re, c.im)) < -44);
  }
  for (const char* x : {"0.5", "1.5", "7.25", "40", "0.01"}) {
    BigReal ref(ctx.bits());
    mpfr_lngamma(ref.raw(), big(x).raw(), MPFR_RNDN);
    const BigComplex lg = log_gamma(BigComplex(big(x)), ctx);
    CHECK(abs_error_log10(lg.re(), ref) < -48);
    CHECK(lg.im().is_zero());
  }
  CHECK(throws_kind([&] { log_gamma(BigComplex(BigReal(-2, ctx.bits())), ctx); }, ErrorKind::pole));
  CHECK(throws_kind([&] { log_gamma(BigComplex(BigReal(0, ctx.bits())), ctx); }, ErrorKind::pole));
}

TEST_CASE("log gamma recurrence") {
  const PrecisionContext ctx(50, 10);
  for (const auto& z : {big("0.3", "4"), big("2.5", "-17"), big("9", "0.125")}) {
    const BigComplex lhs = log_gamma(z + BigComplex(BigReal(1, ctx.bits())), ctx);
    const BigComplex rhs = log_gamma(z, ctx) + log(z);
    CHECK(abs_error_log10(lhs, rhs) < -50);
  }
}

TEST_CASE("xi is normalized, matches frozen values and is symmetric") {
  const PrecisionContext ctx(40, 10);
  const BigComplex one(BigReal(1, ctx.bits()));
  CHECK(abs_error_log10(xi(one, ctx), one) < -45);
  CHECK(abs_error_log10(xi(big("2", "3"), ctx),
                        big("0.83254251979924762948120489611289363920286504434843",
                            "0.17764660993127878151189968871134808423328035273505")) < -40);
  CHECK(abs_error_log10(xi(big("0.5", "20"), ctx).re(),
                        big("-0.000073310855511218913664464758169213157429757788812131")) < -45);

  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    const BigComplex s = big(std::to_string(-1.5 + 0.37 * i), std::to_string(-9.0 + 1.13 * i));
    const BigComplex reflected = one - s;
    const BigComplex a = xi(s, ctx);
    const BigComplex b = xi(reflected, ctx);
    const double scale = std::max(0.0, abs(a).log10_abs());
    CHECK(abs_error_log10(a, b) - scale < -35);
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("log xi parts reassemble xi") {
  const PrecisionContext ctx(40, 10);
  const BigComplex s = big("1.4", "-0.6");
  const auto parts = log_xi_parts(s, ctx);
  const BigComplex total = exp(parts.total(log_ui(2, ctx.bits())));
  CHECK(abs_error_log10(total, xi(s, ctx)) < -45);
}

TEST_CASE("contour coefficients of exp") {
  const mpfr_prec_t bits = bits_for_digits(60);
  const BigComplex center(BigReal(0, bits));
  const auto samples = sample_circle([](const BigComplex& z) { return exp(z); }, center, BigReal(1, bits), 128);
  const auto result = contour_coeffs(samples, 30);
  CHECK_FALSE(result.aliasing_warning);
  for (unsigned n = 0; n <= 30; ++n) {
    const BigReal expected(mpq_class(1, factorial(n)), bits);
    CHECK(abs_error_log10(result.coeffs[n].re(), expected) < -55);
    CHECK(abs(result.coeffs[n].im()).log10_abs() < -55);
  }
}

TEST_CASE("contour aliasing probe and argument checks") {
  const mpfr_prec_t bits = bits_for_digits(60);
  const BigComplex center(BigReal(0, bits));
  // 1/(1 - 0.9 z) decays slowly on |z| = 1, so 16 nodes alias
  const auto f = [bits](const BigComplex& z) {
    return reciprocal(BigComplex(BigReal(1, bits)) - z * BigReal::from_double(0.9, bits));
  };
  const auto samples = sample_circle(f, center, BigReal(1, bits), 16);
  CHECK(contour_coeffs(samples, 5).aliasing_warning);
  CHECK(throws_kind([&] { contour_coeffs(samples, 8); }, ErrorKind::validation));
  CHECK(throws_kind([&] { sample_circle(f, center, BigReal(1, bits), 12); }, ErrorKind::validation));
  CHECK(throws_kind([&] { sample_circle(f, center, BigReal(-1, bits), 16); }, ErrorKind::validation));
}

TEST_CASE("parallel_for visits every index once and rethrows") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
  bool all_once = true;
  for (auto& h : hits) all_once = all_once && h.load() == 1;
  CHECK(all_once);
  CHECK_THROWS_AS(parallel_for(50, [](std::size_t i) {
                    if (i == 17) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
}

}  // TEST_SUITE
