#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "unitfield/errors.hpp"

using namespace unitfield;

TEST_CASE("connection coefficients of exponential profiles") {
  // ds^2 = du^2 + e^{2cu} dv^2: nonzero symbols are
  // G^u_vv = -c e^{2cu}, G^v_uv = c (and G^v_vv = 0 since f_v = 0).
  const double c = 0.7;
  auto chart = th::horocycle_chart(c);
  for (double u : {-0.5, 0.0, 0.8}) {
    Point2 p{u, 0.3};
    Christoffel2 g = christoffel(*chart, p);
    CHECK(g.g[0][1][1] == doctest::Approx(-c * std::exp(2 * c * u)).epsilon(1e-12));
    CHECK(g.g[1][0][1] == doctest::Approx(c).epsilon(1e-12));
    CHECK(g.g[1][1][0] == doctest::Approx(c).epsilon(1e-12));
    CHECK(std::abs(g.g[0][0][0]) < 1e-15);
    CHECK(std::abs(g.g[0][0][1]) < 1e-15);
    CHECK(std::abs(g.g[1][0][0]) < 1e-15);
    CHECK(std::abs(g.g[1][1][1]) < 1e-15);
  }
}

TEST_CASE("connection coefficients of the round profile") {
  auto chart = th::sphere_chart();
  for (double u : {0.6, kPi / 3, 2.1}) {
    Point2 p{u, 1.0};
    Christoffel2 g = christoffel(*chart, p);
    CHECK(g.g[0][1][1] == doctest::Approx(-std::sin(u) * std::cos(u)).epsilon(1e-12));
    CHECK(g.g[1][0][1] == doctest::Approx(1.0 / std::tan(u)).epsilon(1e-12));

    // finite-difference route agrees without analytic partials
    DiffConfig fd;
    fd.use_analytic = false;
    Christoffel2 gf = christoffel(*chart, p, fd);
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          CHECK(gf.g[k][i][j] == doctest::Approx(g.g[k][i][j]).epsilon(1e-7));
  }
}

TEST_CASE("curvature of the standard profiles") {
  auto sphere = th::sphere_chart();
  auto hyper = th::horocycle_chart(1.0);
  auto flat = th::flat_chart();
  for (double u : {0.5, 1.0, 1.4}) {
    Point2 p{u, -0.4};
    CHECK(gauss_curvature(*sphere, p) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gauss_curvature(*hyper, p) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(gauss_curvature(*flat, p) == doctest::Approx(0.0).epsilon(1e-12));
    // independent route: Brioschi on point samples
    CHECK(gauss_curvature_fd(*sphere, p) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(gauss_curvature_fd(*hyper, p) == doctest::Approx(-1.0).epsilon(1e-6));
  }
}

TEST_CASE("curvature of a general-coefficient chart matches the profile route") {
  // Same geometry entered twice: as a profile chart and as raw coefficients.
  ScalarField f = ScalarField::parse("exp(u^2/4)*(1+0.2*sin(v))");
  auto semi = MetricChart::semi_geodesic({-1.2, 1.2, -1.2, 1.2}, f);
  auto gen = MetricChart::general({-1.2, 1.2, -1.2, 1.2}, ScalarField::parse("1"),
                                  ScalarField::parse("0"), f * f);
  for (double u : {-0.8, 0.1, 0.9}) {
    for (double v : {-0.7, 0.5}) {
      Point2 p{u, v};
      CHECK(gauss_curvature(gen, p) ==
            doctest::Approx(gauss_curvature(semi, p)).epsilon(1e-10));
    }
  }
}

TEST_CASE("orthonormal frame of a skewed chart") {
  auto chart = th::skew_chart();
  for (double u : {-0.9, 0.0, 0.8}) {
    Point2 p{u, 0.4};
    auto [x1, x2] = orthonormal_frame(*chart, p);
    CHECK(inner(*chart, p, x1, x1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(inner(*chart, p, x2, x2) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(inner(*chart, p, x1, x2)) < 1e-14);
    CHECK(x1.a * x2.b - x1.b * x2.a > 0.0);  // right-handed
  }
}

TEST_CASE("metric compatibility of the covariant derivative") {
  auto chart = th::skew_chart();
  const VecField& Y = chart->frame1();
  const VecField& Z = chart->frame2();
  ScalarField yz = inner_field(*chart, Y, Z);
  for (double u : {-0.6, 0.3}) {
    Point2 p{u, -0.2};
    for (auto X : {TangentVector{p, 1.0, 0.0}, TangentVector{p, 0.3, -0.8}}) {
      double lhs = scalar_derivative(*chart, X, yz, p);
      double rhs = inner(*chart, p, covariant_derivative(*chart, X, Y, p), Z.at(p)) +
                   inner(*chart, p, Y.at(p), covariant_derivative(*chart, X, Z, p));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("covariant derivative on the round profile") {
  // nabla_{X2} X2 = -cot(u) X1 for X2 = (1/sin u) d_v.
  auto chart = th::sphere_chart();
  Point2 p{kPi / 3, 0.7};
  auto [x1, x2] = orthonormal_frame(*chart, p);
  TangentVector d = covariant_derivative(*chart, x2, chart->frame2(), p);
  double c = -1.0 / std::tan(kPi / 3);  // -1/sqrt(3)
  CHECK(d.a == doctest::Approx(c).epsilon(1e-12));
  CHECK(std::abs(d.b) < 1e-14);
  CHECK(inner(*chart, p, d, x1) == doctest::Approx(c).epsilon(1e-12));

  // finite-difference route
  DiffConfig fd;
  fd.use_analytic = false;
  TangentVector dfd = covariant_derivative(*chart, x2, chart->frame2(), p, fd);
  CHECK(dfd.a == doctest::Approx(c).epsilon(1e-7));
}

TEST_CASE("curvature operator") {
  auto sphere = th::sphere_chart();
  auto skew = th::skew_chart();
  SUBCASE("sectional value on the round profile") {
    for (double u : {0.7, 1.9}) {
      Point2 p{u, 0.1};
      auto [x1, x2] = orthonormal_frame(*sphere, p);
      TangentVector r = riemann(*sphere, p, x1, x2, x2);
      CHECK(inner(*sphere, p, r, x1) == doctest::Approx(1.0).epsilon(1e-11));
    }
  }
  SUBCASE("agrees with the curvature-identity route on a skewed chart") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pos(-0.8, 0.8), comp(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      Point2 p{pos(rng), pos(rng)};
      TangentVector X{p, comp(rng), comp(rng)}, Y{p, comp(rng), comp(rng)},
          Z{p, comp(rng), comp(rng)};
      TangentVector a = riemann(*skew, p, X, Y, Z);
      TangentVector b = riemann_gauss(*skew, p, X, Y, Z);
      CHECK(a.a == doctest::Approx(b.a).epsilon(1e-9).scale(1.0));
      CHECK(a.b == doctest::Approx(b.b).epsilon(1e-9).scale(1.0));
    }
  }
  SUBCASE("finite-difference route") {
    Point2 p{0.3, -0.2};
    TangentVector X{p, 1.0, 0.2}, Y{p, -0.4, 1.0}, Z{p, 0.5, 0.5};
    DiffConfig fd;
    fd.use_analytic = false;
    TangentVector a = riemann(*skew, p, X, Y, Z);
    TangentVector b = riemann(*skew, p, X, Y, Z, fd);
    CHECK(a.a == doctest::Approx(b.a).epsilon(1e-5).scale(1.0));
    CHECK(a.b == doctest::Approx(b.b).epsilon(1e-5).scale(1.0));
  }
}

TEST_CASE("derivative of the curvature operator") {
  // In two dimensions (nabla_d R)(A,B)C = d(K) (<B,C>A - <A,C>B).
  auto bump = th::bump_chart();
  auto sphere = th::sphere_chart();
  SUBCASE("vanishes under constant curvature") {
    Point2 p{1.1, 0.3};
    TangentVector d{p, 0.7, -0.4}, A{p, 1.0, 0.0}, B{p, 0.0, 1.0}, C{p, 0.6, 0.2};
    TangentVector r = riemann_derivative(*sphere, p, d, A, B, C);
    CHECK(std::abs(r.a) < 1e-7);
    CHECK(std::abs(r.b) < 1e-7);
  }
  SUBCASE("matches the curvature-gradient expression") {
    for (double u : {-0.6, 0.4}) {
      Point2 p{u, 0.2};
      TangentVector d{p, 0.5, 0.8}, A{p, 1.0, -0.3}, B{p, 0.2, 1.0}, C{p, -0.7, 0.4};
      TangentVector r = riemann_derivative(*bump, p, d, A, B, C);
      double dK = scalar_derivative(*bump, d, bump->curvature_field(), p);
      double bc = inner(*bump, p, B, C), ac = inner(*bump, p, A, C);
      TangentVector want{p, dK * (bc * A.a - ac * B.a), dK * (bc * A.b - ac * B.b)};
      CHECK(r.a == doctest::Approx(want.a).epsilon(1e-6).scale(1.0));
      CHECK(r.b == doctest::Approx(want.b).epsilon(1e-6).scale(1.0));
    }
  }
}

TEST_CASE("domain and step guards") {
  auto chart = th::sphere_chart();
  CHECK_THROWS_AS(metric_eval(*chart, {-1.0, 0.0}), PointOutOfDomain);
  CHECK_THROWS_AS(gauss_curvature(*chart, {4.0, 0.0}), PointOutOfDomain);
  // close to the edge: fine for analytic evaluation, rejected for stencils
  Point2 edge{0.0505, 0.0};
  CHECK_NOTHROW(gauss_curvature(*chart, edge));
  CHECK_THROWS_AS(gauss_curvature_fd(*chart, edge), StepTooLarge);
  DiffConfig big;
  big.h = 1.0;
  CHECK_THROWS_AS(require_step(*chart, big), StepTooLarge);
  DiffConfig fine;
  CHECK_NOTHROW(require_step(*chart, fine));
  CHECK_THROWS_AS(MetricChart::semi_geodesic({1.0, 0.0, 0.0, 1.0}, ScalarField::parse("1")),
                  BadParams);
}
