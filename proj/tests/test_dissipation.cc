#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "burgers/dissipation.hpp"

using namespace burgers;

TEST_CASE("factories couple sigma and k_d through k_d = 1/(2 sigma)") {
  DissipationSymbol e = DissipationSymbol::exponential(1.0, 0.5);
  CHECK(e.k_d == doctest::Approx(1.0));
  DissipationSymbol c = DissipationSymbol::cosh_symbol(1.0, 2.0);
  CHECK(c.sigma == doctest::Approx(0.25));
  DissipationSymbol s = DissipationSymbol::stretched(2.0, 0.5, 1.5);
  CHECK(s.alpha == doctest::Approx(1.5));
  CHECK(s.mu == doctest::Approx(2.0));
}

TEST_CASE("rate: worked examples") {
  SUBCASE("exponential") {
    DissipationSymbol sym = DissipationSymbol::exponential(1.0, 0.5);
    CHECK(sym.rate(1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(sym.rate(0.0) == doctest::Approx(1.0));  // mu, not 0
    CHECK(sym.rate(3.0) == doctest::Approx(std::exp(3.0)).epsilon(1e-15));
  }
  SUBCASE("cosh") {
    DissipationSymbol sym = DissipationSymbol::cosh_symbol(1.0, 1.0);
    CHECK(sym.rate(0.0) == 0.0);
    CHECK(sym.rate(1.0) ==
          doctest::Approx(std::cosh(1.0) - 1.0).epsilon(1e-15));
    // tiny k: the expm1 form keeps full relative accuracy of k^2/2
    CHECK(sym.rate(1e-8) == doctest::Approx(5e-17).epsilon(1e-9));
  }
  SUBCASE("stretched exponential") {
    DissipationSymbol sym = DissipationSymbol::stretched(1.0, 0.5, 2.0);
    CHECK(sym.rate(3.0) == doctest::Approx(std::exp(9.0)).epsilon(1e-15));
    CHECK(sym.rate(0.0) == doctest::Approx(1.0));
  }
  SUBCASE("power laplacian") {
    DissipationSymbol sym = DissipationSymbol::power_laplacian(2.0, 1.0);
    CHECK(sym.rate(3.0) == doctest::Approx(18.0));
    CHECK(sym.rate(0.0) == 0.0);
    DissipationSymbol half = DissipationSymbol::power_laplacian(1.0, 0.5);
    CHECK(half.rate(5.0) == doctest::Approx(5.0));  // |k|^(2*1/2)
  }
}

TEST_CASE("growth exponent: worked examples") {
  SUBCASE("exponential: G(k) = 2 sigma |k|") {
    DissipationSymbol sym = DissipationSymbol::exponential(1.0, 0.5);
    CHECK(sym.growth_exponent(4.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(sym.growth_exponent(0.0) == 0.0);
  }
  SUBCASE("stretched: G(k) = 2 sigma |k|^alpha") {
    DissipationSymbol sym = DissipationSymbol::stretched(1.0, 0.5, 2.0);
    CHECK(sym.growth_exponent(3.0) == doctest::Approx(9.0).epsilon(1e-15));
  }
  SUBCASE("cosh: G(k) = ln(cosh(k/k_d) - 1)") {
    DissipationSymbol sym = DissipationSymbol::cosh_symbol(1.0, 1.0);
    CHECK(sym.growth_exponent(10.0) ==
          doctest::Approx(9.306762017519313).epsilon(1e-14));
    CHECK(sym.growth_exponent(1.0) ==
          doctest::Approx(std::log(std::cosh(1.0) - 1.0)).epsilon(1e-14));
  }
  SUBCASE("mu scales out of G") {
    DissipationSymbol sym = DissipationSymbol::exponential(37.0, 0.5);
    CHECK(sym.growth_exponent(4.0) == doctest::Approx(4.0).epsilon(1e-13));
  }
}

TEST_CASE("growth exponent stays finite where rate overflows") {
  // rate(710) overflows to inf for the exponential families; G must not.
  DissipationSymbol e = DissipationSymbol::exponential(1.0, 0.5);
  CHECK(std::isinf(e.rate(710.0)));
  CHECK(e.growth_exponent(710.0) == doctest::Approx(710.0).epsilon(1e-15));

  DissipationSymbol c = DissipationSymbol::cosh_symbol(1.0, 1.0);
  CHECK(std::isinf(c.rate(710.0)));
  CHECK(c.growth_exponent(710.0) ==
        doctest::Approx(710.0 - std::log(2.0)).epsilon(1e-15));

  DissipationSymbol s = DissipationSymbol::stretched(1.0, 0.5, 2.0);
  CHECK(s.growth_exponent(100.0) == doctest::Approx(1e4).epsilon(1e-15));
}

TEST_CASE("cosh and exponential growth agree past 20 dissipation lengths") {
  // G_cosh(k) -> k/k_d - ln 2 with an O(e^{-2k/k_d}) remainder.
  for (double k_d : {1.0, 0.5, 2.0}) {
    DissipationSymbol sym = DissipationSymbol::cosh_symbol(1.0, k_d);
    for (double ratio : {20.0, 25.0, 40.0}) {
      const double k = ratio * k_d;
      const double limit = k / k_d - std::log(2.0);
      CHECK(std::abs(sym.growth_exponent(k) - limit) <= 1e-8);
    }
  }
}

TEST_CASE("growth exponent domain errors where the rate vanishes") {
  DissipationSymbol c = DissipationSymbol::cosh_symbol(1.0, 1.0);
  CHECK_THROWS_AS((void)c.growth_exponent(0.0), std::domain_error);
  DissipationSymbol p = DissipationSymbol::power_laplacian(1.0, 1.0);
  CHECK_THROWS_AS((void)p.growth_exponent(0.0), std::domain_error);
  // the exponential families have rate(0) = mu > 0, so G(0) = 0 is fine
  DissipationSymbol e = DissipationSymbol::exponential(1.0, 0.5);
  CHECK_NOTHROW((void)e.growth_exponent(0.0));
}

TEST_CASE("rates are even and nondecreasing in |k|") {
  std::mt19937_64 rng(57721);
  std::uniform_real_distribution<double> ks(0.0, 50.0);
  const DissipationSymbol symbols[] = {
      DissipationSymbol::exponential(1.0, 0.5),
      DissipationSymbol::cosh_symbol(1.0, 1.0),
      DissipationSymbol::cosh_symbol(0.3, 2.5),
      DissipationSymbol::stretched(1.0, 0.5, 2.0),
      DissipationSymbol::stretched(2.0, 1.0, 1.3),
      DissipationSymbol::power_laplacian(1.0, 1.0),
      DissipationSymbol::power_laplacian(1.0, 0.5),
  };
  for (const DissipationSymbol& sym : symbols) {
    for (int trial = 0; trial < 1000; ++trial) {
      const double k = ks(rng);
      REQUIRE(sym.rate(-k) == sym.rate(k));
      const double k2 = k + ks(rng);
      REQUIRE(sym.rate(k2) >= sym.rate(k));
      REQUIRE(sym.rate(k) >= 0.0);
    }
  }
}

TEST_CASE("family names round trip") {
  for (const char* name :
       {"exponential", "cosh", "stretched_exponential", "power_laplacian"}) {
    DissipationSymbol sym;
    sym.family = family_from_name(name);
    CHECK(sym.family_name() == name);
  }
  CHECK_THROWS_AS(family_from_name("gaussian"), std::invalid_argument);
}
