#include <doctest.h>

#include <cmath>
#include <numbers>

#include "psinfo/phasespace.hpp"
#include "psinfo/survival.hpp"

using namespace psinfo;

namespace {

RealField1D gaussian(double var, const GridSpec1D& g = GridSpec1D()) {
  return RealField1D::sample(g, [var](double x) {
    return std::exp(-x * x / (2 * var)) / std::sqrt(2 * std::numbers::pi * var);
  });
}

// -int s ln s for s(a) = erfc(a / sqrt(2 var)) / 2, fine trapezoid on [-12, 12]
double cre_oracle(double var) {
  const int n = 200001;
  const double lo = -12.0, h = 24.0 / (n - 1);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double s = 0.5 * std::erfc((lo + i * h) / std::sqrt(2 * var));
    const double f = s > 0.0 ? -s * std::log(s) : 0.0;
    acc += (i == 0 || i == n - 1) ? 0.5 * f : f;
  }
  return acc * h;
}

PhaseSpaceField field_of(int n, double lambda, FieldKind kind, const GridSpec2D& g = default_grid()) {
  auto w = wigner(oscillator_state({n, lambda}, Space::position, g.x), g);
  return kind == FieldKind::wigner ? w : husimi_from_wigner(w);
}

}  // namespace

TEST_CASE("survival_1d") {
  auto s = survival_1d(gaussian(0.5));
  CHECK(std::abs(s.values(256) - 0.5) < 1e-8);
  CHECK(std::abs(s.values(0) - 1.0) < 1e-6);
  CHECK(std::abs(s.values(256 + 32) - 0.5 * std::erfc(1.0)) < 1e-6);
  // odd offset from the right end goes through the half-panel rule
  CHECK(std::abs(s.values(256 + 33) - 0.5 * std::erfc(33.0 / 32)) < 1e-6);
}

TEST_CASE("survival_2d") {
  auto s = survival_2d(field_of(0, 0.0, FieldKind::wigner));
  CHECK(std::abs(s.values(0, 0) - 1.0) < 1e-6);
  CHECK(std::abs(s.values(256, 256) - 0.25) < 1e-8);
  CHECK(std::abs(s.values(512, 512)) == 0.0);
}

TEST_CASE("cumulative residual entropy") {
  const double c = cumulative_residual_entropy(survival_1d(gaussian(0.5)));
  CHECK(std::abs(c - cre_oracle(0.5)) < 1e-5);

  // stretching by k = 2 multiplies the entropy by 2
  CHECK(std::abs(cumulative_residual_entropy(survival_1d(gaussian(2.0))) - 2 * c) < 1e-5);

  GridSpec1D fine(-1, 1, 4001);
  CHECK(cumulative_residual_entropy(survival_1d(gaussian(1e-4, fine))) < 0.01);
}

TEST_CASE("cross cumulative residual entropy") {
  for (auto kind : {FieldKind::wigner, FieldKind::husimi}) {
    auto cc = cross_cumulative_residual_entropy(field_of(0, 0.0, kind));
    CHECK(std::abs(cc.real_part) < 1e-5);
    CHECK(std::abs(cc.imag_part) < 1e-5);
  }

  auto h = cross_cumulative_residual_entropy(field_of(0, 0.1, FieldKind::husimi));
  CHECK(h.imag_part == 0.0);
  CHECK(std::abs(h.real_part) > 1e-5);
  GridSpec2D coarse{GridSpec1D(-8, 8, 257), GridSpec1D(-8, 8, 257)};
  auto hc = cross_cumulative_residual_entropy(field_of(0, 0.1, FieldKind::husimi, coarse));
  CHECK((hc.real_part > 0) == (h.real_part > 0));

  auto w = cross_cumulative_residual_entropy(field_of(1, 0.1, FieldKind::wigner));
  CHECK(std::abs(w.imag_part) > 1e-3);
}

TEST_CASE("jeffreys divergence") {
  auto sw = survival_1d(gaussian(0.5));
  auto sh = survival_1d(gaussian(1.5));
  CHECK(std::abs(jeffreys_divergence(sw, sw)) < 1e-10);

  const int n = 200001;
  const double lo = -12.0, step = 24.0 / (n - 1);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = lo + i * step;
    const double p = std::max(0.5 * std::erfc(a), 1e-300);
    const double q = std::max(0.5 * std::erfc(a / std::sqrt(3.0)), 1e-300);
    const double f = (p - q) * (std::log(p) - std::log(q));
    acc += (i == 0 || i == n - 1) ? 0.5 * f : f;
  }
  const double j = jeffreys_divergence(sw, sh);
  CHECK(j > 0.0);
  CHECK(std::abs(j - acc * step) < 1e-5);

  auto other = survival_1d(gaussian(0.5, GridSpec1D(-8, 8, 257)));
  CHECK_THROWS(jeffreys_divergence(sw, other));
}
