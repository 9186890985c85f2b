#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "psinfo/errors.hpp"
#include "psinfo/phasespace.hpp"

using namespace psinfo;

namespace {

const PhaseSpaceField& ground_wigner() {
  static const PhaseSpaceField w = wigner(ho_eigenstate(0, Space::position), default_grid());
  return w;
}

const PhaseSpaceField& first_wigner() {
  static const PhaseSpaceField w = wigner(ho_eigenstate(1, Space::position), default_grid());
  return w;
}

double at_origin(const PhaseSpaceField& f) { return f.values()(256, 256); }

}  // namespace

TEST_CASE("field kind names") {
  CHECK(to_string(FieldKind::husimi) == "husimi");
  CHECK(parse_field_kind("wigner") == FieldKind::wigner);
  CHECK_THROWS(parse_field_kind("glauber"));
}

TEST_CASE("wigner of oscillator states") {
  const auto& w0 = ground_wigner();
  CHECK(std::abs(at_origin(w0) - 1.0 / std::numbers::pi) < 1e-8);
  CHECK(std::abs(w0.values()(256 + 32, 256 - 64) - std::exp(-1.0 - 4.0) / std::numbers::pi) < 1e-8);
  CHECK(std::abs(integrate_2d(w0.field) - 1.0) < 1e-12);

  // independent 1D quadrature at the origin: W(0,0) = (1/pi) int psi(-y) psi(y) dy
  auto psi1 = ho_eigenstate(1, Space::position);
  auto lag = RealField1D::sample(GridSpec1D(-10, 10, 2001),
                                 [&](double y) { return (std::conj(psi1(-y)) * psi1(y)).real(); });
  const double oracle = integrate_1d(lag) / std::numbers::pi;
  CHECK(std::abs(oracle + 1.0 / std::numbers::pi) < 1e-9);
  CHECK(std::abs(at_origin(first_wigner()) - oracle) < 1e-6);
}

TEST_CASE("broken evaluator is caught") {
  // an evaluator that is not a function of x alone breaks the Hermitian symmetry
  auto calls = std::make_shared<int>(0);
  auto bad = Wavefunction::normalized(
      Space::position,
      [calls](double x) { return std::polar(std::exp(-x * x / 2), 0.1 * ++*calls); },
      GridSpec1D(-6, 6, 65));
  GridSpec2D g{GridSpec1D(-6, 6, 65), GridSpec1D(-6, 6, 65)};
  CHECK_THROWS_AS(wigner(bad, g), InvariantViolation);
  CHECK_THROWS_AS(wigner(fourier_transform(ho_eigenstate(0, Space::position)), g), std::invalid_argument);
}

TEST_CASE("husimi") {
  auto h = husimi_from_wigner(ground_wigner());
  CHECK(h.kind == FieldKind::husimi);
  CHECK(std::abs(at_origin(h) - std::sqrt(2.0) / (3.0 * std::numbers::pi)) < 1e-6);
  CHECK(std::abs(integrate_2d(h.field) - 1.0) < 1e-6);
  CHECK(husimi_from_wigner(first_wigner()).values().minCoeff() >= -1e-10);

  auto h5 = husimi_from_wigner(wigner(ho_eigenstate(5, Space::position), default_grid()));
  CHECK(h5.values().minCoeff() >= -1e-10);

  // narrow input: variances approach the kernel's (1, 1/4)
  const double eps = 0.01;
  auto narrow = RealField2D::sample(default_grid(), [&](double x, double p) {
    return std::exp(-(x * x + p * p) / (2 * eps)) / (2 * std::numbers::pi * eps);
  });
  auto hn = husimi_from_wigner(PhaseSpaceField{narrow, FieldKind::wigner});
  auto x2 = RealField2D::sample(default_grid(), [](double x, double) { return x * x; });
  auto p2 = RealField2D::sample(default_grid(), [](double, double p) { return p * p; });
  CHECK(integrate_2d(RealField2D(hn.grid(), hn.values().cwiseProduct(x2.values))) ==
        doctest::Approx(1.0 + eps).epsilon(1e-6));
  CHECK(integrate_2d(RealField2D(hn.grid(), hn.values().cwiseProduct(p2.values))) ==
        doctest::Approx(0.25 + eps).epsilon(1e-6));
}

TEST_CASE("marginals") {
  auto m = marginals(ground_wigner());
  CHECK(std::abs(m.rho_x.values(256) - 1.0 / std::sqrt(std::numbers::pi)) < 1e-8);
  auto psi = ho_eigenstate(0, Space::position);
  CHECK((m.rho_x.values - psi.density().values).cwiseAbs().maxCoeff() < 1e-8);

  auto mh = marginals(husimi_from_wigner(ground_wigner()));
  CHECK(std::abs(mh.rho_x.values(256) - 1.0 / std::sqrt(3.0 * std::numbers::pi)) < 1e-6);

  auto m1 = marginals(first_wigner());
  CHECK(std::abs(m1.rho_x.values(256)) < 1e-8);

  auto half = ground_wigner();
  half.field.values *= 0.5;
  CHECK_THROWS_AS(marginals(half), InvariantViolation);
}

TEST_CASE("expectation") {
  auto one = RealField2D::sample(default_grid(), [](double, double) { return 1.0; });
  auto energy = RealField2D::sample(default_grid(), [](double x, double p) { return (x * x + p * p) / 2; });
  CHECK(std::abs(expectation(one, ground_wigner()) - 1.0) < 1e-6);
  CHECK(std::abs(expectation(energy, ground_wigner()) - 0.5) < 1e-6);
  CHECK(std::abs(expectation(energy, first_wigner()) - 1.5) < 1e-6);
}
