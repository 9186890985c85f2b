#ifndef PSINFO_ENTROPY_HPP
#define PSINFO_ENTROPY_HPP

#include <complex>

#include "psinfo/phasespace.hpp"
#include "psinfo/quadrature.hpp"

namespace psinfo {

// Entropy in nats; imag_part is nonzero only when a signed density entered a logarithm.
struct ComplexEntropy {
  double real_part = 0.0;
  double imag_part = 0.0;

  std::complex<double> value() const { return {real_part, imag_part}; }
};

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  double margin = 0.0;

  static constexpr double kSlack = 1e-9;
  static BoundCheck make(double lhs, double rhs);
};

// Densities below this floor contribute nothing to logarithmic integrands.
inline constexpr double kDensityFloor = 1e-14;

// Negative values below -kNegativeError are rejected where a density is required;
// values in [-kNegativeError, 0) are treated as round-off and clamped.
inline constexpr double kNegativeError = 1e-8;

/// rho * ln(rho) on the principal branch, ln(w) = ln|w| + i pi for w < 0; zero below the floor.
std::complex<double> x_log_x(double w);

/// \int\int w ln w on the principal branch, with sign-change panels refined.
std::complex<double> integrate_x_log_x(const RealField2D& field);

double shannon_1d(const RealField1D& rho);

ComplexEntropy wigner_entropy(const PhaseSpaceField& w);

double wehrl_entropy(const PhaseSpaceField& h);

double renyi_1d(const RealField1D& rho, double alpha);

double renyi_phase_space(const PhaseSpaceField& field, int alpha);

/// \int rho (d ln rho / dx)^2 with centered differences. Below the density floor the
/// integrand is replaced by its node limit 2 rho'' (clamped at zero), so isolated zeros of
/// rho keep their finite contribution.
double fisher_information(const RealField1D& rho);

/// S_x + S_p >= 1 + ln pi.
BoundCheck check_shannon_bound(double sx, double sp);

/// R_x^alpha + R_p^beta >= -ln(beta/pi)/(2(1-beta)) - ln(alpha/pi)/(2(1-alpha)) for
/// 1/alpha + 1/beta = 2. The pair alpha = beta = 2 is the collision relation with rhs ln 2pi.
BoundCheck check_renyi_bound(double rx, double rp, double alpha, double beta);

/// F_x F_p >= 4.
BoundCheck check_fisher_bound(double fx, double fp);

}  // namespace psinfo

#endif  // PSINFO_ENTROPY_HPP
