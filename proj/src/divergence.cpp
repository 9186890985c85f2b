#include "psinfo/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace psinfo {

namespace {

constexpr double kRatioFloor = 1e-300;
constexpr double kSupportThreshold = 1e-12;
constexpr double kPairNormTol = 1e-6;
constexpr double kPairNegativeTol = 1e-10;

void require_support_overlap(const DensityPair& pair, const char* where) {
  const Eigen::VectorXd& p = pair.p().values;
  const Eigen::VectorXd& q = pair.q().values;
  double best = 0.0;
  bool any_support = false;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) > kSupportThreshold) {
      any_support = true;
      best = std::max(best, q(i));
    }
  }
  if (any_support && !(best > 0.0)) {
    throw std::domain_error(std::string(where) + ": q vanishes on the support of p");
  }
}

}  // namespace

DensityPair::DensityPair(RealField1D p, RealField1D q) : p_(std::move(p)), q_(std::move(q)) {
  if (!(p_.grid == q_.grid)) throw std::invalid_argument("DensityPair: densities live on different grids");
  for (const RealField1D* d : {&p_, &q_}) {
    if (d->values.minCoeff() < -kPairNegativeTol) {
      throw std::invalid_argument("DensityPair: density has negative values");
    }
    const double mass = integrate_1d(*d);
    if (std::abs(mass - 1.0) > kPairNormTol) {
      throw std::invalid_argument("DensityPair: density mass " + std::to_string(mass) + " is not 1");
    }
  }
}

double kl_divergence(const DensityPair& pair) {
  require_support_overlap(pair, "kl_divergence");
  const Eigen::VectorXd& p = pair.p().values;
  const Eigen::VectorXd& q = pair.q().values;
  Eigen::VectorXd integrand(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    integrand(i) = p(i) > kDensityFloor ? p(i) * std::log(p(i) / std::max(q(i), kRatioFloor)) : 0.0;
  }
  return integrate_1d(RealField1D(pair.p().grid, std::move(integrand)));
}

double renyi_divergence(const DensityPair& pair, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("renyi_divergence: alpha must be > 0");
  if (alpha == 1.0) throw std::invalid_argument("renyi_divergence: alpha = 1 is the KL divergence");
  require_support_overlap(pair, "renyi_divergence");
  const Eigen::VectorXd& p = pair.p().values;
  const Eigen::VectorXd& q = pair.q().values;
  Eigen::VectorXd integrand(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    integrand(i) = p(i) > kDensityFloor
                       ? std::exp(alpha * std::log(p(i)) + (1.0 - alpha) * std::log(std::max(q(i), kRatioFloor)))
                       : 0.0;
  }
  return std::log(integrate_1d(RealField1D(pair.p().grid, std::move(integrand)))) / (alpha - 1.0);
}

MutualInformationResult mutual_information(const PhaseSpaceField& field) {
  const MarginalPair m = marginals(field);
  const GridSpec2D& g = field.grid();
  // a vanishing marginal contributes no log term, same convention as shannon_1d
  auto log_or_zero = [](double r) { return r > kDensityFloor ? std::log(r) : 0.0; };
  const Eigen::VectorXd lx = m.rho_x.values.unaryExpr(log_or_zero);
  const Eigen::VectorXd lp = m.rho_p.values.unaryExpr(log_or_zero);
  Eigen::MatrixXd linear(g.x.points(), g.p.points());
  for (Eigen::Index i = 0; i < g.x.points(); ++i) {
    for (Eigen::Index j = 0; j < g.p.points(); ++j) linear(i, j) = field.values()(i, j) * (lx(i) + lp(j));
  }
  const std::complex<double> direct = integrate_x_log_x(field.field) - integrate_2d(RealField2D(g, std::move(linear)));

  const double sx = shannon_1d(m.rho_x);
  const double sp = shannon_1d(m.rho_p);
  ComplexEntropy joint;
  if (field.kind == FieldKind::wigner) {
    joint = wigner_entropy(field);
  } else {
    joint.real_part = wehrl_entropy(field);
  }
  return {{direct.real(), direct.imag()}, {sx + sp - joint.real_part, -joint.imag_part}, field.kind};
}

double renyi_mutual_information(const PhaseSpaceField& field) {
  const MarginalPair m = marginals(field);
  const GridSpec2D& g = field.grid();
  const double zero_x = kDensityFloor * m.rho_x.values.maxCoeff();
  const double zero_p = kDensityFloor * m.rho_p.values.maxCoeff();
  Eigen::MatrixXd integrand(g.x.points(), g.p.points());
  for (Eigen::Index i = 0; i < g.x.points(); ++i) {
    for (Eigen::Index j = 0; j < g.p.points(); ++j) {
      const double f = field.values()(i, j);
      if (f * f <= kDensityFloor) {
        integrand(i, j) = 0.0;
        continue;
      }
      const double rx = m.rho_x.values(i);
      const double rp = m.rho_p.values(j);
      if (rx <= zero_x || rp <= zero_p) return std::numeric_limits<double>::infinity();
      integrand(i, j) = f * f / (rx * rp);
    }
  }
  return std::log(integrate_2d(RealField2D(g, std::move(integrand))));
}

double cauchy_schwarz_divergence(const RealField2D& f1, const RealField2D& f2) {
  if (!(f1.grid == f2.grid)) throw std::invalid_argument("cauchy_schwarz_divergence: grid mismatch");
  const double n1 = integrate_2d(RealField2D(f1.grid, f1.values.cwiseAbs2()));
  const double n2 = integrate_2d(RealField2D(f2.grid, f2.values.cwiseAbs2()));
  if (!(n1 > 0.0) || !(n2 > 0.0)) {
    throw std::invalid_argument("cauchy_schwarz_divergence: field is identically zero");
  }
  const double cross = integrate_2d(RealField2D(f1.grid, f1.values.cwiseProduct(f2.values)));
  return -std::log(cross * cross / (n1 * n2));
}

}  // namespace psinfo
