#ifndef PSINFO_DIVERGENCE_HPP
#define PSINFO_DIVERGENCE_HPP

#include "psinfo/entropy.hpp"
#include "psinfo/phasespace.hpp"

namespace psinfo {

// Two normalized, non-negative densities on one grid.
class DensityPair {
 public:
  DensityPair(RealField1D p, RealField1D q);

  const RealField1D& p() const { return p_; }
  const RealField1D& q() const { return q_; }

 private:
  RealField1D p_;
  RealField1D q_;
};

struct MutualInformationResult {
  ComplexEntropy direct;    // \int\int f ln(f / (rho_x rho_p))
  ComplexEntropy entropic;  // S_x + S_p - S_f
  FieldKind source;
};

double kl_divergence(const DensityPair& pair);

/// (alpha - 1)^{-1} ln \int p^alpha q^{1 - alpha}.
double renyi_divergence(const DensityPair& pair, double alpha);

MutualInformationResult mutual_information(const PhaseSpaceField& field);

/// ln \int\int f^2 / (rho_x rho_p). Returns +inf when the field is non-negligible where the
/// marginal product vanishes (the integral diverges there).
double renyi_mutual_information(const PhaseSpaceField& field);

/// -ln[(\int f1 f2)^2 / (\int f1^2 \int f2^2)].
double cauchy_schwarz_divergence(const RealField2D& f1, const RealField2D& f2);

}  // namespace psinfo

#endif  // PSINFO_DIVERGENCE_HPP
