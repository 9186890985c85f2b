#include "psinfo/survival.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace psinfo {

namespace {

constexpr double kJeffreysFloor = 1e-300;

}  // namespace

SurvivalField1D survival_1d(const RealField1D& rho) {
  require_finite(rho.values, "survival_1d");
  return {rho.grid, suffix_integral(rho.values, rho.grid.step())};
}

SurvivalField2D survival_2d(const PhaseSpaceField& field) {
  const GridSpec2D& g = field.grid();
  require_finite(field.values(), "survival_2d");
  Eigen::MatrixXd along_p(g.x.points(), g.p.points());
  for (Eigen::Index i = 0; i < g.x.points(); ++i) {
    along_p.row(i) = suffix_integral(field.values().row(i).transpose(), g.p.step()).transpose();
  }
  Eigen::MatrixXd s(g.x.points(), g.p.points());
  for (Eigen::Index j = 0; j < g.p.points(); ++j) {
    s.col(j) = suffix_integral(along_p.col(j), g.x.step());
  }
  return {g, std::move(s)};
}

double cumulative_residual_entropy(const SurvivalField1D& s) {
  const Eigen::VectorXd integrand = s.values.unaryExpr([](double v) {
    const double c = std::clamp(v, 0.0, 1.0);
    return c > 0.0 ? c * std::log(c) : 0.0;
  });
  return -integrate_1d(RealField1D(s.grid, integrand));
}

ComplexEntropy conditional_momentum_cre(const PhaseSpaceField& field) {
  const GridSpec2D& g = field.grid();
  const Eigen::VectorXd rho_x = field.values() * g.p.simpson_weights();
  Eigen::MatrixXcd integrand(g.x.points(), g.p.points());
  for (Eigen::Index i = 0; i < g.x.points(); ++i) {
    const Eigen::VectorXd tail = suffix_integral(field.values().row(i).transpose(), g.p.step());
    for (Eigen::Index j = 0; j < g.p.points(); ++j) {
      const double t = tail(j);
      if (std::abs(t) <= kDensityFloor || rho_x(i) <= kDensityFloor) {
        integrand(i, j) = 0.0;
        continue;
      }
      const double ratio = t / rho_x(i);
      integrand(i, j) = ratio > 0.0 ? std::complex<double>(t * std::log(ratio), 0.0)
                                    : std::complex<double>(t * std::log(-ratio), t * std::numbers::pi);
    }
  }
  const std::complex<double> eps = -integrate_2d(ComplexField2D(g, std::move(integrand)));
  return {eps.real(), eps.imag()};
}

ComplexEntropy cross_cumulative_residual_entropy(const PhaseSpaceField& field) {
  const GridSpec2D& g = field.grid();
  const RealField1D rho_p(g.p, field.values().transpose() * g.x.simpson_weights());
  const double cp = cumulative_residual_entropy(survival_1d(rho_p));
  const ComplexEntropy eps = conditional_momentum_cre(field);
  return {cp - eps.real_part, -eps.imag_part};
}

double jeffreys_divergence(const SurvivalField1D& sW, const SurvivalField1D& sH) {
  if (!(sW.grid == sH.grid)) throw std::invalid_argument("jeffreys_divergence: survival grids differ");
  const Eigen::ArrayXd a = sW.values.array().max(kJeffreysFloor).min(1.0);
  const Eigen::ArrayXd b = sH.values.array().max(kJeffreysFloor).min(1.0);
  const Eigen::VectorXd integrand = ((a - b) * (a.log() - b.log())).matrix();
  return integrate_1d(RealField1D(sW.grid, integrand));
}

}  // namespace psinfo
