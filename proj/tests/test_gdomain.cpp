#include "gbenard/gdomain.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "doctest.h"

using namespace gbenard;

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(Grid2(4), ConfigError);
  CHECK_THROWS_AS(Grid2(48), ConfigError);
  CHECK(Grid2(32).h() == doctest::Approx(1.0 / 32));
  CHECK(Grid2(32).kx(31) == -1);
  CHECK(Grid2(32).kx(16) == -16);
}

TEST_CASE("spectral round trip is identity") {
  Grid2 g(32);
  Fft2 fft(g);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FieldS f(g);
  for (int i = 0; i < g.nodes(); ++i) f.v[i] = u(rng);
  FieldS back = fft.inv(fft.fwd(f));
  CHECK((back.v - f.v).abs().maxCoeff() < 1e-12 * f.v.abs().maxCoeff());
}

TEST_CASE("spectral derivatives of low modes are exact") {
  Grid2 g(32);
  Fft2 fft(g);
  FieldS f = FieldS::sample(g, [](double x, double y) {
    return std::sin(kTwoPi * x) + 0.5 * std::cos(2.0 * kTwoPi * y);
  });
  FieldS dx = fft.deriv_x(f);
  FieldS dy = fft.deriv_y(f);
  for (int ix = 0; ix < g.n; ix += 3) {
    for (int iy = 0; iy < g.n; iy += 3) {
      CHECK(dx.at(ix, iy) ==
            doctest::Approx(kTwoPi * std::cos(kTwoPi * g.x(ix))).epsilon(1e-10));
      CHECK(dy.at(ix, iy) ==
            doctest::Approx(-kTwoPi * std::sin(2.0 * kTwoPi * g.y(iy)))
                .epsilon(1e-10));
    }
  }
}

TEST_CASE("gweight construction and assumption checks") {
  Grid2 g(32);
  Fft2 fft(g);

  GWeight one = make_gweight({"constant", {{"value", 1.0}}}, g, fft);
  CHECK(one.m0 == doctest::Approx(1.0));
  CHECK(one.M0 == doctest::Approx(1.0));
  CHECK(one.grad_inf == doctest::Approx(0.0));
  CHECK(one.is_constant());

  GWeight gs = make_gweight({"sin_x", {{"amp", 0.2}}}, g, fft);
  CHECK(gs.m0 == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(gs.M0 == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(gs.grad_inf == doctest::Approx(0.4 * M_PI).epsilon(1e-12));
  // smallness: 1.579 < pi^2 0.512 / 1.2 = 4.211
  CHECK(gs.grad_inf * gs.grad_inf <
        M_PI * M_PI * std::pow(gs.m0, 3) / gs.M0);

  CHECK_THROWS_WITH_AS(make_gweight({"sin_x", {{"amp", 0.9}}}, g, fft),
                       doctest::Contains("smallness violation"), ConfigError);
  CHECK_THROWS_WITH_AS(make_gweight({"sin_x", {{"amp", 1.5}}}, g, fft),
                       doctest::Contains("m0 violation"), ConfigError);
  CHECK_THROWS_AS(make_gweight({"nope", {}}, g, fft), ConfigError);
}

TEST_CASE("inner_g quadrature values and symmetry") {
  Grid2 g(64);
  Fft2 fft(g);
  GWeight one = make_gweight({"constant", {}}, g, fft);
  FieldS s = FieldS::sample(g, [](double x, double) { return std::sin(kTwoPi * x); });
  CHECK(inner_g(s, s, one) == doctest::Approx(0.5).epsilon(1e-13));

  GWeight gs = make_gweight({"sin_x", {{"amp", 0.2}}}, g, fft);
  FieldS c = FieldS::sample(g, [](double, double) { return 1.0; });
  CHECK(inner_g(c, c, gs) == doctest::Approx(1.0).epsilon(1e-13));

  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FieldS a(g), b(g);
  for (int i = 0; i < g.nodes(); ++i) {
    a.v[i] = u(rng);
    b.v[i] = u(rng);
  }
  CHECK(inner_g(a, b, gs) == inner_g(b, a, gs));

  // Norm equivalence m0 |a|^2 <= |a|_g^2 <= M0 |a|^2.
  const double l2 = g.h() * g.h() * (a.v * a.v).sum();
  const double wg = inner_g(a, a, gs);
  CHECK(wg >= gs.m0 * l2 - 1e-12);
  CHECK(wg <= gs.M0 * l2 + 1e-12);
}

TEST_CASE("h1 seminorm values and monotonicity in g") {
  Grid2 g(32);
  Fft2 fft(g);
  GWeight one = make_gweight({"constant", {}}, g, fft);
  FieldS c = FieldS::sample(g, [](double, double) { return 3.0; });
  CHECK(h1_seminorm_g(c, one, fft) == doctest::Approx(0.0));

  FieldS s = FieldS::sample(g, [](double x, double) { return std::sin(kTwoPi * x); });
  CHECK(h1_seminorm_g(s, one, fft) ==
        doctest::Approx(kTwoPi * std::sqrt(0.5)).epsilon(1e-12));

  GWeight big = make_gweight({"constant", {{"value", 1.3}}}, g, fft);
  CHECK(h1_seminorm_g(s, big, fft) >= h1_seminorm_g(s, one, fft));
}

TEST_CASE("g_divergence closed forms") {
  Grid2 g(64);
  Fft2 fft(g);
  GWeight one = make_gweight({"constant", {}}, g, fft);
  GWeight gs = make_gweight({"sin_x", {{"amp", 0.2}}}, g, fft);

  Field2 zero(g);
  CHECK(g_divergence(zero, gs, fft).v.abs().maxCoeff() == 0.0);

  // Curl of a stream function is divergence-free for g = 1.
  FieldS psi = FieldS::sample(g, [](double x, double y) {
    return std::sin(kTwoPi * x) * std::cos(2.0 * kTwoPi * y) +
           0.3 * std::cos(kTwoPi * (x + y));
  });
  Field2 curl(g);
  curl.x.v = -fft.deriv_y(psi).v;
  curl.y.v = fft.deriv_x(psi).v;
  CHECK(g_divergence(curl, one, fft).v.abs().maxCoeff() < 1e-10);

  // u = (1,0): div(g u) = dg/dx = 0.4 pi cos(2 pi x).
  Field2 ex(g);
  ex.x.v.setConstant(1.0);
  FieldS d = g_divergence(ex, gs, fft);
  for (int ix = 0; ix < g.n; ix += 5)
    CHECK(d.at(ix, 7) ==
          doctest::Approx(0.4 * M_PI * std::cos(kTwoPi * g.x(ix))).epsilon(1e-10));
}

TEST_CASE("snapshot binary round trip and csv export") {
  Grid2 g(16);
  Fft2 fft(g);
  FieldS a = FieldS::sample(g, [](double x, double y) { return x + 2.0 * y; });
  FieldS b = FieldS::sample(g, [](double x, double y) { return x * y; });
  const std::string path = "snapshot_test.bin";
  write_snapshot(path, {&a, &b}, 0.25, 0.5);
  double t = 0.0, al = 0.0;
  auto fields = read_snapshot(path, &t, &al);
  REQUIRE(fields.size() == 2);
  CHECK(t == 0.25);
  CHECK(al == 0.5);
  CHECK((fields[0].v - a.v).abs().maxCoeff() == 0.0);
  CHECK((fields[1].v - b.v).abs().maxCoeff() == 0.0);
  write_field_csv("snapshot_test.csv", {&a});
  std::remove(path.c_str());
  std::remove("snapshot_test.csv");
}
