#include "psinfo/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "psinfo/errors.hpp"

namespace psinfo {

namespace {

constexpr double kImagError = 1e-8;
constexpr double kHusimiNegativeError = 1e-8;
constexpr double kMarginalMassTol = 1e-5;

// K(i, j) = w_j k(x_i - x_j) / mass, so that K * f is the normalized convolution.
Eigen::MatrixXd convolution_matrix(const GridSpec1D& g, double variance) {
  const Eigen::VectorXd nodes = g.nodes();
  const Eigen::VectorXd w = g.simpson_weights();
  const double inv_mass = 1.0 / std::sqrt(2.0 * std::numbers::pi * variance);
  Eigen::MatrixXd k(g.points(), g.points());
  for (Eigen::Index i = 0; i < g.points(); ++i) {
    for (Eigen::Index j = 0; j < g.points(); ++j) {
      const double d = nodes(i) - nodes(j);
      k(i, j) = w(j) * inv_mass * std::exp(-0.5 * d * d / variance);
    }
  }
  return k;
}

}  // namespace

std::string to_string(FieldKind kind) { return kind == FieldKind::wigner ? "wigner" : "husimi"; }

FieldKind parse_field_kind(const std::string& name) {
  if (name == "wigner") return FieldKind::wigner;
  if (name == "husimi") return FieldKind::husimi;
  throw std::invalid_argument("unknown field kind '" + name + "' (expected wigner|husimi)");
}

PhaseSpaceField wigner(const Wavefunction& psi, const GridSpec2D& grid) {
  if (psi.space() != Space::position) {
    throw std::invalid_argument("wigner: wavefunction must be in position space");
  }
  const double extent = std::max(std::abs(grid.x.min()), std::abs(grid.x.max()));
  const GridSpec1D yg(-extent, extent, grid.x.points());
  const Eigen::VectorXd y = yg.nodes();
  const Eigen::VectorXd wy = yg.simpson_weights();
  const Eigen::VectorXd x = grid.x.nodes();
  const Eigen::VectorXd p = grid.p.nodes();

  Eigen::MatrixXcd corr(x.size(), y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    for (Eigen::Index k = 0; k < y.size(); ++k) {
      corr(i, k) = wy(k) * std::conj(psi(x(i) - y(k))) * psi(x(i) + y(k));
    }
  }
  Eigen::MatrixXcd phase(y.size(), p.size());
  for (Eigen::Index k = 0; k < y.size(); ++k) {
    for (Eigen::Index j = 0; j < p.size(); ++j) phase(k, j) = std::polar(1.0, -2.0 * p(j) * y(k));
  }
  const Eigen::MatrixXcd w = (corr * phase) / std::numbers::pi;

  const double imag = w.imag().cwiseAbs().maxCoeff();
  if (imag > kImagError) {
    throw InvariantViolation("wigner: imaginary residue " + std::to_string(imag) +
                             " exceeds 1e-8 (broken evaluator?)");
  }
  RealField2D field(grid, w.real());
  const double mass = integrate_2d(field);
  if (!(mass > 0.0)) throw InvariantViolation("wigner: non-positive total mass");
  field.values /= mass;
  return {std::move(field), FieldKind::wigner};
}

PhaseSpaceField husimi_from_wigner(const PhaseSpaceField& w, double s) {
  if (w.kind != FieldKind::wigner) throw std::invalid_argument("husimi_from_wigner: input must be a Wigner field");
  if (!(s > 0.0)) throw std::invalid_argument("husimi_from_wigner: s must be > 0");
  const Eigen::MatrixXd kx = convolution_matrix(w.grid().x, 1.0);
  const Eigen::MatrixXd kp = convolution_matrix(w.grid().p, 0.25 / (s * s));
  RealField2D field(w.grid(), kx * w.values() * kp.transpose());
  const double mass = integrate_2d(field);
  if (!(mass > 0.0)) throw InvariantViolation("husimi_from_wigner: non-positive total mass");
  field.values /= mass;
  const double lowest = field.values.minCoeff();
  if (lowest < -kHusimiNegativeError) {
    throw InvariantViolation("husimi_from_wigner: negative value " + std::to_string(lowest));
  }
  return {std::move(field), FieldKind::husimi};
}

MarginalPair marginals(const PhaseSpaceField& field) {
  const Eigen::VectorXd wx = field.grid().x.simpson_weights();
  const Eigen::VectorXd wp = field.grid().p.simpson_weights();
  MarginalPair m{RealField1D(field.grid().x, field.values() * wp),
                 RealField1D(field.grid().p, field.values().transpose() * wx)};
  for (const RealField1D* r : {&m.rho_x, &m.rho_p}) {
    const double mass = integrate_1d(*r);
    if (std::abs(mass - 1.0) > kMarginalMassTol) {
      throw InvariantViolation("marginals: mass " + std::to_string(mass) + " outside 1 +- 1e-5");
    }
  }
  return m;
}

double expectation(const RealField2D& symbol, const PhaseSpaceField& w) {
  if (w.kind != FieldKind::wigner) throw std::invalid_argument("expectation: requires a Wigner field");
  if (!(symbol.grid == w.grid())) throw std::invalid_argument("expectation: grid mismatch");
  return integrate_2d(RealField2D(w.grid(), symbol.values.cwiseProduct(w.values())));
}

}  // namespace psinfo
