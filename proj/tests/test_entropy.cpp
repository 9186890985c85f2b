#include <doctest.h>

#include <cmath>
#include <numbers>

#include "psinfo/entropy.hpp"
#include "psinfo/phasespace.hpp"

using namespace psinfo;

namespace {

constexpr double kPi = std::numbers::pi;

RealField1D gaussian(double var, const GridSpec1D& g = GridSpec1D()) {
  return RealField1D::sample(g, [var](double x) { return std::exp(-x * x / (2 * var)) / std::sqrt(2 * kPi * var); });
}

PhaseSpaceField wigner_of(int n, const GridSpec2D& g = default_grid()) {
  return wigner(ho_eigenstate(n, Space::position, g.x), g);
}

const PhaseSpaceField& w0() {
  static const PhaseSpaceField w = wigner_of(0);
  return w;
}

const PhaseSpaceField& w1() {
  static const PhaseSpaceField w = wigner_of(1);
  return w;
}

}  // namespace

TEST_CASE("shannon_1d") {
  CHECK(std::abs(shannon_1d(gaussian(0.5)) - (1 + std::log(kPi)) / 2) < 1e-6);
  auto mh = marginals(husimi_from_wigner(w0()));
  CHECK(std::abs(shannon_1d(mh.rho_x) - (1 + std::log(3 * kPi)) / 2) < 1e-5);
  auto uniform = RealField1D::sample(GridSpec1D(0, 2, 101), [](double) { return 0.5; });
  CHECK(std::abs(shannon_1d(uniform) - std::log(2.0)) < 1e-9);

  auto neg = uniform;
  neg.values(3) = -1e-6;
  CHECK_THROWS_AS(shannon_1d(neg), std::domain_error);
}

TEST_CASE("wigner entropy") {
  auto s0 = wigner_entropy(w0());
  CHECK(s0.imag_part == 0.0);
  CHECK(std::abs(s0.real_part - (1 + std::log(kPi))) < 1e-5);

  auto s1 = wigner_entropy(w1());
  CHECK(std::abs(s1.imag_part) > 0.01);

  GridSpec2D coarse{GridSpec1D(-8, 8, 257), GridSpec1D(-8, 8, 257)};
  auto c1 = wigner_entropy(wigner_of(1, coarse));
  CHECK(std::abs(c1.real_part - s1.real_part) < 1e-4);
  CHECK(std::abs(c1.imag_part - s1.imag_part) < 1e-4);

  CHECK_THROWS(wigner_entropy(husimi_from_wigner(w0())));
}

TEST_CASE("wehrl entropy") {
  auto h = husimi_from_wigner(w0());
  CHECK(std::abs(wehrl_entropy(h) - (1 + std::log(2 * kPi) + 0.5 * std::log(9.0 / 8.0))) < 1e-5);
  CHECK_THROWS(wehrl_entropy(w0()));
}

TEST_CASE("renyi_1d") {
  CHECK(std::abs(renyi_1d(gaussian(0.5), 2.0) - 0.5 * std::log(2 * kPi)) < 1e-6);
  CHECK(std::abs(renyi_1d(gaussian(0.5), 1 + 1e-6) - shannon_1d(gaussian(0.5))) < 1e-4);
  auto uniform = RealField1D::sample(GridSpec1D(0, 2, 101), [](double) { return 0.5; });
  for (double a : {0.5, 2.0, 4.0}) CHECK(std::abs(renyi_1d(uniform, a) - std::log(2.0)) < 1e-9);
  CHECK_THROWS_AS(renyi_1d(uniform, 1.0), std::invalid_argument);
}

TEST_CASE("renyi_phase_space") {
  CHECK(std::abs(renyi_phase_space(w0(), 2) - std::log(2 * kPi)) < 1e-4);
  CHECK(std::abs(renyi_phase_space(w1(), 2) - std::log(2 * kPi)) < 1e-4);
  // Gaussian Husimi, covariance diag(3/2, 3/4): int H^2 = 1 / (4 pi sqrt(det))
  auto h = husimi_from_wigner(w0());
  CHECK(std::abs(renyi_phase_space(h, 2) - std::log(4 * kPi * std::sqrt(9.0 / 8.0))) < 1e-5);
  CHECK_THROWS(renyi_phase_space(w0(), 3));
  CHECK_NOTHROW(renyi_phase_space(h, 3));
}

TEST_CASE("fisher information") {
  auto m0 = marginals(w0());
  auto m1 = marginals(w1());
  CHECK(std::abs(fisher_information(m0.rho_x) - 2.0) < 1e-4);
  CHECK(std::abs(fisher_information(m1.rho_x) - 6.0) < 1e-3);
  CHECK(std::abs(fisher_information(m0.rho_x) * fisher_information(m0.rho_p) - 4.0) < 1e-3);
}

TEST_CASE("bounds") {
  auto sat = check_shannon_bound(1.07236, 1.07236);
  CHECK(sat.satisfied == (sat.margin >= -BoundCheck::kSlack));
  CHECK(std::abs(sat.margin) < 1e-4);
  CHECK_FALSE(check_shannon_bound(0, 0).satisfied);

  auto mh = marginals(husimi_from_wigner(w0()));
  const double sh = shannon_1d(mh.rho_x);
  auto hb = check_shannon_bound(sh, sh);
  CHECK(hb.satisfied);
  CHECK(hb.margin == doctest::Approx(std::log(3 * kPi) - std::log(kPi)).epsilon(1e-5));

  CHECK(check_renyi_bound(1, 1, 2, 2).rhs == doctest::Approx(std::log(2 * kPi)));
  auto m0 = marginals(w0());
  auto rb = check_renyi_bound(renyi_1d(m0.rho_x, 2), renyi_1d(m0.rho_p, 2), 2, 2);
  CHECK(rb.lhs == doctest::Approx(1.83788).epsilon(1e-5));
  CHECK(std::abs(rb.margin) < 1e-6);

  auto conj = check_renyi_bound(1, 1, 2.0 / 3.0, 2.0);
  CHECK(std::isfinite(conj.rhs));
  CHECK_THROWS(check_renyi_bound(1, 1, 2, 4));

  CHECK(check_fisher_bound(2, 2).satisfied);
  CHECK_FALSE(check_fisher_bound(1, 2).satisfied);
}
