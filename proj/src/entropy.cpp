#include "psinfo/entropy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace psinfo {

namespace {

using cplx = std::complex<double>;

void require_density(const RealField1D& rho, const char* where) {
  const double lowest = rho.values.minCoeff();
  if (lowest < -kNegativeError) {
    throw std::domain_error(std::string(where) + ": density has negative value " +
                            std::to_string(lowest));
  }
}

double safe_x_log_x(double w) { return w > kDensityFloor ? w * std::log(w) : 0.0; }

}  // namespace

BoundCheck BoundCheck::make(double lhs, double rhs) {
  BoundCheck b;
  b.lhs = lhs;
  b.rhs = rhs;
  b.margin = lhs - rhs;
  b.satisfied = b.margin >= -kSlack;
  return b;
}

cplx x_log_x(double w) {
  const double a = std::abs(w);
  if (a <= kDensityFloor) return {0.0, 0.0};
  if (w > 0.0) return {w * std::log(w), 0.0};
  return {w * std::log(a), w * std::numbers::pi};
}

double shannon_1d(const RealField1D& rho) {
  require_density(rho, "shannon_1d");
  const RealField1D integrand(rho.grid, rho.values.unaryExpr(&safe_x_log_x));
  return -integrate_1d(integrand);
}

cplx integrate_x_log_x(const RealField2D& field) {
  require_finite(field.values, "integrate_x_log_x");
  const Eigen::MatrixXd& w = field.values;
  const cplx plain = integrate_2d(ComplexField2D(field.grid, w.unaryExpr(&x_log_x)));

  // Simpson panels straddling w = 0 see a kink in w ln|w|; redo those on sub-cells of the
  // biquadratic interpolant, which is the polynomial Simpson integrates exactly.
  constexpr int kSub = 8;
  const double gl[3] = {-std::sqrt(0.6), 0.0, std::sqrt(0.6)};
  const double gw[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  auto lagrange = [](double u, double out[3]) {
    out[0] = 0.5 * u * (u - 1.0);
    out[1] = 1.0 - u * u;
    out[2] = 0.5 * u * (u + 1.0);
  };
  const double hx = field.grid.x.step();
  const double hp = field.grid.p.step();
  const double simpson[3] = {1.0 / 3.0, 4.0 / 3.0, 1.0 / 3.0};
  cplx correction(0.0, 0.0);
  for (Eigen::Index a = 0; a + 2 < w.rows(); a += 2) {
    for (Eigen::Index b = 0; b + 2 < w.cols(); b += 2) {
      const Eigen::Matrix3d block = w.block<3, 3>(a, b);
      if (!(block.minCoeff() < 0.0 && block.maxCoeff() > 0.0)) continue;
      cplx coarse(0.0, 0.0);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) coarse += simpson[i] * simpson[j] * x_log_x(block(i, j));
      }
      cplx fine(0.0, 0.0);
      const double span = 2.0 / kSub;
      for (int su = 0; su < kSub; ++su) {
        for (int sv = 0; sv < kSub; ++sv) {
          for (int qi = 0; qi < 3; ++qi) {
            double lu[3];
            lagrange(-1.0 + span * (su + 0.5 * (gl[qi] + 1.0)), lu);
            for (int qj = 0; qj < 3; ++qj) {
              double lv[3];
              lagrange(-1.0 + span * (sv + 0.5 * (gl[qj] + 1.0)), lv);
              double value = 0.0;
              for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) value += lu[i] * lv[j] * block(i, j);
              }
              fine += (0.25 * span * span * gw[qi] * gw[qj]) * x_log_x(value);
            }
          }
        }
      }
      correction += hx * hp * (fine - coarse);
    }
  }
  return plain + correction;
}

ComplexEntropy wigner_entropy(const PhaseSpaceField& w) {
  if (w.kind != FieldKind::wigner) throw std::invalid_argument("wigner_entropy: requires a Wigner field");
  const cplx s = -integrate_x_log_x(w.field);
  return {s.real(), s.imag()};
}

double wehrl_entropy(const PhaseSpaceField& h) {
  if (h.kind != FieldKind::husimi) throw std::invalid_argument("wehrl_entropy: requires a Husimi field");
  const double lowest = h.values().minCoeff();
  if (lowest < -kNegativeError) {
    throw std::domain_error("wehrl_entropy: Husimi field has negative value " + std::to_string(lowest));
  }
  return -integrate_2d(RealField2D(h.grid(), h.values().unaryExpr(&safe_x_log_x)));
}

double renyi_1d(const RealField1D& rho, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("renyi_1d: alpha must be > 0");
  if (alpha == 1.0) throw std::invalid_argument("renyi_1d: alpha = 1 is the Shannon entropy; use shannon_1d");
  require_density(rho, "renyi_1d");
  const RealField1D powered(rho.grid, rho.values.cwiseMax(0.0).array().pow(alpha).matrix());
  return std::log(integrate_1d(powered)) / (1.0 - alpha);
}

double renyi_phase_space(const PhaseSpaceField& field, int alpha) {
  if (alpha < 2) throw std::invalid_argument("renyi_phase_space: alpha must be an integer >= 2");
  if (field.kind == FieldKind::wigner && alpha % 2 != 0) {
    throw std::invalid_argument("renyi_phase_space: odd alpha on a Wigner field gives a complex entropy");
  }
  const RealField2D powered(field.grid(), field.values().array().pow(alpha).matrix());
  return std::log(integrate_2d(powered)) / (1.0 - alpha);
}

// Fourth-order centered differences where the stencil fits; the second-order stencil
// leaves an O(h^2) error of about 1.5e-2 for the first excited state at the default grid.
double fisher_information(const RealField1D& rho) {
  const Eigen::Index n = rho.values.size();
  const double h = rho.grid.step();
  const Eigen::VectorXd& r = rho.values;
  auto first = [&](Eigen::Index i) {
    if (i == 0) return (r(1) - r(0)) / h;
    if (i == n - 1) return (r(n - 1) - r(n - 2)) / h;
    if (i == 1 || i == n - 2) return (r(i + 1) - r(i - 1)) / (2.0 * h);
    return (-r(i + 2) + 8.0 * r(i + 1) - 8.0 * r(i - 1) + r(i - 2)) / (12.0 * h);
  };
  auto second = [&](Eigen::Index i) {
    if (i == 0 || i == n - 1) return 0.0;
    if (i == 1 || i == n - 2) return (r(i + 1) - 2.0 * r(i) + r(i - 1)) / (h * h);
    return (-r(i + 2) + 16.0 * r(i + 1) - 30.0 * r(i) + 16.0 * r(i - 1) - r(i - 2)) / (12.0 * h * h);
  };
  Eigen::VectorXd integrand(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (r(i) < kDensityFloor) {
      // rho'^2 / rho tends to 2 rho'' at a simple node
      integrand(i) = std::max(0.0, 2.0 * second(i));
      continue;
    }
    const double d = first(i);
    integrand(i) = d * d / r(i);
  }
  return integrate_1d(RealField1D(rho.grid, std::move(integrand)));
}

BoundCheck check_shannon_bound(double sx, double sp) {
  return BoundCheck::make(sx + sp, 1.0 + std::log(std::numbers::pi));
}

BoundCheck check_renyi_bound(double rx, double rp, double alpha, double beta) {
  if (alpha == 2.0 && beta == 2.0) return BoundCheck::make(rx + rp, std::log(2.0 * std::numbers::pi));
  if (!(alpha > 0.0 && beta > 0.0) || alpha == 1.0 || beta == 1.0) {
    throw std::invalid_argument("check_renyi_bound: alpha, beta must be positive and != 1");
  }
  if (std::abs(1.0 / alpha + 1.0 / beta - 2.0) > 1e-12) {
    throw std::invalid_argument("check_renyi_bound: orders must satisfy 1/alpha + 1/beta = 2");
  }
  const double pi = std::numbers::pi;
  const double rhs = -std::log(beta / pi) / (2.0 * (1.0 - beta)) - std::log(alpha / pi) / (2.0 * (1.0 - alpha));
  return BoundCheck::make(rx + rp, rhs);
}

BoundCheck check_fisher_bound(double fx, double fp) { return BoundCheck::make(fx * fp, 4.0); }

}  // namespace psinfo
