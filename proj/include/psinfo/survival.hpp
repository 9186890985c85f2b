#ifndef PSINFO_SURVIVAL_HPP
#define PSINFO_SURVIVAL_HPP

#include "psinfo/entropy.hpp"
#include "psinfo/phasespace.hpp"

namespace psinfo {

// s(a) = \int_a^max rho, one value per grid threshold.
struct SurvivalField1D {
  GridSpec1D grid;
  Eigen::VectorXd values;
};

// s(a, b) = \int_a^max \int_b^max field.
struct SurvivalField2D {
  GridSpec2D grid;
  Eigen::MatrixXd values;
};

SurvivalField1D survival_1d(const RealField1D& rho);

/// Signed fields (Wigner) keep their negative parts; no clamping.
SurvivalField2D survival_2d(const PhaseSpaceField& field);

/// -\int s ln s da with s clamped to [0, 1].
double cumulative_residual_entropy(const SurvivalField1D& s);

/// Expected conditional CRE of momentum,
///   eps = -\int\int db dx T(x,b) ln(T(x,b) / rho_x(x)),  T(x,b) = \int_b^max field(x,p) dp,
/// evaluated on the principal branch when T is negative.
ComplexEntropy conditional_momentum_cre(const PhaseSpaceField& field);

/// Cross-cumulative residual entropy C_p - eps. Vanishes for product fields.
ComplexEntropy cross_cumulative_residual_entropy(const PhaseSpaceField& field);

/// \int [sW ln(sW/sH) + sH ln(sH/sW)] with both survivals floored at 1e-300.
double jeffreys_divergence(const SurvivalField1D& sW, const SurvivalField1D& sH);

}  // namespace psinfo

#endif  // PSINFO_SURVIVAL_HPP
