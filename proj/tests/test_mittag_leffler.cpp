#include <cmath>

#include "doctest.h"
#include "gbenard/fraccalc.hpp"

using namespace gbenard;

namespace {

// Scaled complementary error function, independent of the library path.
// E_{1/2}(z) = erfcx(-z) on the real line.
double erfcx_oracle(double x) {
  if (x < 25.0) return std::exp(x * x) * std::erfc(x);
  // Asymptotic series 1/(x sqrt(pi)) * sum (-1)^n (2n-1)!! / (2x^2)^n.
  const double ix2 = 1.0 / (2.0 * x * x);
  double term = 1.0, sum = 1.0;
  for (int n = 1; n < 12; ++n) {
    term *= -(2.0 * n - 1.0) * ix2;
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return sum / (x * std::sqrt(M_PI));
}

}  // namespace

TEST_CASE("mittag-leffler trivial values") {
  for (double a : {0.2, 0.5, 0.8, 1.0})
    CHECK(mittag_leffler(FracOrder(a), 0.0) == 1.0);
  CHECK(mittag_leffler(FracOrder(1.0), -1.0) ==
        doctest::Approx(0.367879441171442).epsilon(1e-13));
  CHECK(mittag_leffler(FracOrder(1.0), 2.0) ==
        doctest::Approx(std::exp(2.0)).epsilon(1e-13));
}

TEST_CASE("mittag-leffler half-order identity against erfcx") {
  CHECK(mittag_leffler(FracOrder(0.5), -1.0) ==
        doctest::Approx(0.427583576155807).epsilon(1e-12));
  // Sweep the full supported range, all three evaluation regimes.
  for (double z = -50.0; z <= 5.0; z += 0.23) {
    const double ref = erfcx_oracle(-z);
    const double got = mittag_leffler(FracOrder(0.5), z);
    CHECK(std::abs(got - ref) <= 1e-10 * std::abs(ref));
  }
}

TEST_CASE("mittag-leffler regime boundaries are continuous") {
  for (double a : {0.3, 0.45, 0.7, 0.9}) {
    FracOrder fa(a);
    for (double b : {-2.0, -10.0}) {
      const double eps = 1e-7;
      const double lo = mittag_leffler(fa, b - eps);
      const double hi = mittag_leffler(fa, b + eps);
      CHECK(std::abs(hi - lo) <= 1e-6 * std::abs(lo) + 1e-14);
    }
  }
}

TEST_CASE("mittag-leffler complete monotonicity on the negative axis") {
  for (double a : {0.3, 0.6, 0.95}) {
    double prev = 1.0;
    for (double x = 0.5; x <= 50.0; x += 0.5) {
      const double v = mittag_leffler(FracOrder(a), -x);
      CHECK(v > 0.0);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("mittag-leffler series cap raises a numeric error") {
  // Small alpha at the positive end of the range needs more than the
  // 200-term budget.
  CHECK_THROWS_AS(mittag_leffler(FracOrder(0.3), 5.0), NumericError);
}
