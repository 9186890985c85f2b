#ifndef PSINFO_PHASESPACE_HPP
#define PSINFO_PHASESPACE_HPP

#include <string>

#include "psinfo/quadrature.hpp"
#include "psinfo/states.hpp"

namespace psinfo {

enum class FieldKind { wigner, husimi };

std::string to_string(FieldKind kind);
FieldKind parse_field_kind(const std::string& name);

// Real quasi-probability on an (x, p) grid, normalized to unit mass.
struct PhaseSpaceField {
  RealField2D field;
  FieldKind kind;

  const GridSpec2D& grid() const { return field.grid; }
  const Eigen::MatrixXd& values() const { return field.values; }
};

struct MarginalPair {
  RealField1D rho_x;
  RealField1D rho_p;
};

/// W(x,p) = (1/pi) \int dy psi*(x-y) psi(x+y) e^{-2ipy}, evaluated as a dense product of the
/// (x, y) correlation matrix with the (y, p) phase matrix.
PhaseSpaceField wigner(const Wavefunction& psi, const GridSpec2D& grid);

/// Gaussian smoothing of W with x-kernel e^{-(x-x')^2/2} and p-kernel e^{-2 s^2 (p-p')^2},
/// applied as two separable passes.
PhaseSpaceField husimi_from_wigner(const PhaseSpaceField& w, double s = 1.0);

MarginalPair marginals(const PhaseSpaceField& field);

/// \int\int symbol W dx dp (overlap formula for a Weyl symbol).
double expectation(const RealField2D& symbol, const PhaseSpaceField& w);

}  // namespace psinfo

#endif  // PSINFO_PHASESPACE_HPP
