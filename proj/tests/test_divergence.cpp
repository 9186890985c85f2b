#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "psinfo/divergence.hpp"
#include "psinfo/phasespace.hpp"

using namespace psinfo;

namespace {

constexpr double kPi = std::numbers::pi;

RealField1D gaussian(double var, const GridSpec1D& g = GridSpec1D()) {
  return RealField1D::sample(g, [var](double x) { return std::exp(-x * x / (2 * var)) / std::sqrt(2 * kPi * var); });
}

PhaseSpaceField wigner_of(int n, double lambda, const GridSpec2D& g = default_grid()) {
  return wigner(oscillator_state({n, lambda}, Space::position, g.x), g);
}

// alpha-divergence between centered normals, variances vp and vq
double gaussian_renyi(double vp, double vq, double alpha) {
  const double va = alpha * vq + (1 - alpha) * vp;
  return 0.5 * std::log(vq / vp) + std::log(vq / va) / (2 * (alpha - 1));
}

// overlap of centered 2D normals with diagonal covariances
double overlap(double ax, double ap, double bx, double bp) {
  return 1.0 / (2 * kPi * std::sqrt((ax + bx) * (ap + bp)));
}

}  // namespace

TEST_CASE("density pair validation") {
  auto p = gaussian(0.5);
  CHECK_THROWS(DensityPair(p, gaussian(0.5, GridSpec1D(-8, 8, 257))));
  auto half = p;
  half.values *= 0.5;
  CHECK_THROWS(DensityPair(half, p));
  auto neg = p;
  neg.values(10) = -1e-6;
  CHECK_THROWS(DensityPair(neg, p));
}

TEST_CASE("kl divergence") {
  auto p = gaussian(0.5);
  auto q = gaussian(1.5);
  CHECK(std::abs(kl_divergence(DensityPair(p, p))) < 1e-10);
  CHECK(std::abs(kl_divergence(DensityPair(p, q)) - 0.5 * (1.0 / 3 - 1 + std::log(3.0))) < 1e-5);

  // q vanishing on p's support
  GridSpec1D g(0, 2, 201);
  auto left = RealField1D::sample(g, [](double x) { return x < 1.0 ? 1.0 : 0.0; });
  auto right = RealField1D::sample(g, [](double x) { return x > 1.0 ? 1.0 : 0.0; });
  left.values /= integrate_1d(left);
  right.values /= integrate_1d(right);
  CHECK_THROWS_AS(kl_divergence(DensityPair(left, right)), std::domain_error);
}

TEST_CASE("renyi divergence") {
  auto p = gaussian(0.5);
  auto q = gaussian(1.5);
  CHECK(std::abs(renyi_divergence(DensityPair(p, p), 2)) < 1e-10);
  CHECK(std::abs(renyi_divergence(DensityPair(p, q), 1 + 1e-6) - kl_divergence(DensityPair(p, q))) < 1e-4);
  CHECK(std::abs(renyi_divergence(DensityPair(p, q), 2) - gaussian_renyi(0.5, 1.5, 2)) < 1e-5);
  CHECK(std::abs(renyi_divergence(DensityPair(p, q), 4) - gaussian_renyi(0.5, 1.5, 4)) < 1e-5);
}

TEST_CASE("mutual information") {
  // separable ground state; the n = 1 field is not a product of its marginals
  auto w = wigner_of(0, 0.0);
  for (const auto& f : {w, husimi_from_wigner(w)}) {
    auto mi = mutual_information(f);
    CHECK(std::abs(mi.direct.real_part) < 1e-5);
    CHECK(std::abs(mi.direct.imag_part) < 1e-5);
    CHECK(std::abs(mi.entropic.real_part) < 1e-5);
  }

  auto h = mutual_information(husimi_from_wigner(wigner_of(0, 0.1)));
  CHECK(h.source == FieldKind::husimi);
  CHECK(h.direct.imag_part == 0.0);
  CHECK(h.direct.real_part >= -1e-9);
  CHECK(std::abs(h.direct.real_part - h.entropic.real_part) < 1e-4);

  auto w1 = mutual_information(wigner_of(1, 0.1));
  auto w2 = mutual_information(wigner_of(1, 0.2));
  CHECK(std::abs(w1.direct.imag_part) > 0.01);
  CHECK(w2.direct.imag_part < w1.direct.imag_part);  // more negative with lambda
  CHECK(std::abs(w1.direct.imag_part - w1.entropic.imag_part) < 1e-4);
}

TEST_CASE("renyi mutual information") {
  auto w = wigner_of(0, 0.0);
  CHECK(std::abs(renyi_mutual_information(w)) < 1e-5);
  CHECK(std::abs(renyi_mutual_information(husimi_from_wigner(w))) < 1e-5);

  // odd states: rho_x vanishes at x = 0 where W does not
  CHECK(renyi_mutual_information(wigner_of(1, 0.0)) == std::numeric_limits<double>::infinity());

  GridSpec2D coarse{GridSpec1D(-8, 8, 257), GridSpec1D(-8, 8, 257)};
  const double fine = renyi_mutual_information(husimi_from_wigner(wigner_of(0, 0.1)));
  const double rough = renyi_mutual_information(husimi_from_wigner(wigner_of(0, 0.1, coarse)));
  CHECK(std::abs(fine - rough) < 1e-4);

  double last = -1.0;
  for (double lam : {0.0, 0.05, 0.1, 0.15, 0.2}) {
    const double v = renyi_mutual_information(husimi_from_wigner(wigner_of(0, lam)));
    CHECK(v > last);
    last = v;
  }
}

TEST_CASE("cauchy schwarz divergence") {
  auto w = wigner_of(0, 0.0);
  auto h = husimi_from_wigner(w);
  CHECK(std::abs(cauchy_schwarz_divergence(w.field, w.field)) < 1e-10);
  const double cross = overlap(0.5, 0.5, 1.5, 0.75);
  const double expected = -std::log(cross * cross / (overlap(0.5, 0.5, 0.5, 0.5) * overlap(1.5, 0.75, 1.5, 0.75)));
  CHECK(std::abs(cauchy_schwarz_divergence(w.field, h.field) - expected) < 1e-5);

  auto zero = w.field;
  zero.values.setZero();
  CHECK_THROWS(cauchy_schwarz_divergence(w.field, zero));
}
