#include <doctest.h>

#include <cmath>
#include <numbers>

#include "psinfo/quadrature.hpp"

using namespace psinfo;

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(GridSpec1D(0, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec1D(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec1D(1, 0, 5), std::invalid_argument);
  GridSpec1D g;
  CHECK(g.points() == 513);
  CHECK(g.step() == doctest::Approx(1.0 / 32));
  CHECK(g.at(256) == 0.0);
  CHECK(g.simpson_weights().sum() == doctest::Approx(16.0).epsilon(1e-14));
}

TEST_CASE("integrate_1d") {
  auto one = RealField1D::sample(GridSpec1D(0, 1, 3), [](double) { return 1.0; });
  CHECK(integrate_1d(one) == doctest::Approx(1.0).epsilon(1e-15));

  // Simpson is exact for cubics
  auto sq = RealField1D::sample(GridSpec1D(0, 1, 5), [](double x) { return x * x; });
  CHECK(std::abs(integrate_1d(sq) - 1.0 / 3.0) < 1e-15);

  auto gauss = RealField1D::sample(GridSpec1D(), [](double x) { return std::exp(-x * x); });
  CHECK(std::abs(integrate_1d(gauss) - std::sqrt(std::numbers::pi)) < 1e-10);
}

TEST_CASE("non-finite sample names the index") {
  auto f = RealField1D::sample(GridSpec1D(0, 1, 5), [](double x) { return 1.0 / (x - 0.5); });
  try {
    integrate_1d(f);
    FAIL("expected domain_error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("index 2") != std::string::npos);
  }
}

TEST_CASE("integrate_2d") {
  GridSpec2D unit{GridSpec1D(0, 1, 3), GridSpec1D(0, 1, 5)};
  auto one = RealField2D::sample(unit, [](double, double) { return 1.0; });
  CHECK(integrate_2d(one) == doctest::Approx(1.0).epsilon(1e-15));

  auto g = RealField2D::sample(default_grid(), [](double x, double p) { return std::exp(-x * x - p * p); });
  CHECK(std::abs(integrate_2d(g) - std::numbers::pi) < 1e-9);

  auto odd = RealField2D::sample(default_grid(), [](double x, double p) { return x * std::exp(-x * x - p * p / 3); });
  CHECK(std::abs(integrate_2d(odd)) < 1e-12);

  // complex path
  auto c = ComplexField2D::sample(unit, [](double x, double) { return std::complex<double>(x, 1.0); });
  auto v = integrate_2d(c);
  CHECK(v.real() == doctest::Approx(0.5));
  CHECK(v.imag() == doctest::Approx(1.0));
}

TEST_CASE("suffix_integral") {
  GridSpec1D g(0, 2, 9);
  Eigen::VectorXd f = g.nodes().array().square();
  Eigen::VectorXd s = suffix_integral(f, g.step());
  CHECK(s(0) == integrate_1d(RealField1D(g, f)));
  for (Eigen::Index i = 0; i < g.points(); ++i) {
    const double a = g.at(i);
    CHECK(s(i) == doctest::Approx((8.0 - a * a * a) / 3.0).epsilon(1e-13));
  }
  CHECK(s(g.points() - 1) == 0.0);
}

TEST_CASE("tail_extent") {
  CHECK(tail_extent(1.0, 1e-12) >= 5.256);
  CHECK(tail_extent(1.0, 1e-12) == doctest::Approx(std::sqrt(12 * std::log(10.0))));
  CHECK(tail_extent(1.0, std::exp(-64.0)) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(tail_extent(2.0, 1e-12) == doctest::Approx(2 * tail_extent(1.0, 1e-12)));
  CHECK_THROWS(tail_extent(0.0, 0.1));
  CHECK_THROWS(tail_extent(1.0, 1.0));
}
