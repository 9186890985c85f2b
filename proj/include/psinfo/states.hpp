#ifndef PSINFO_STATES_HPP
#define PSINFO_STATES_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "psinfo/quadrature.hpp"

namespace psinfo {

// Quartic anharmonic oscillator H = p^2/2 + x^2/2 + (lambda/4) x^4 with hbar = m = omega = 1.
struct OscillatorSpec {
  int n = 0;
  double lambda = 0.0;

  static constexpr double kPerturbativeLimit = 0.5;

  void validate() const;
  bool perturbative() const { return lambda <= kPerturbativeLimit; }
  std::string describe() const;

  auto operator<=>(const OscillatorSpec&) const = default;
};

enum class Space { position, momentum };

std::string to_string(Space space);

using Evaluator = std::function<std::complex<double>(double)>;

// Normalized wavefunction: keeps the evaluator, a sampled copy on its grid and the
// L2 norm of the raw evaluator that was divided out.
class Wavefunction {
 public:
  // Rescales `raw` so that the Simpson norm on `grid` is one.
  static Wavefunction normalized(Space space, Evaluator raw, const GridSpec1D& grid);

  Space space() const { return space_; }
  std::complex<double> operator()(double x) const { return evaluator_(x); }
  const Evaluator& evaluator() const { return evaluator_; }
  const ComplexField1D& sampled() const { return sampled_; }
  const GridSpec1D& grid() const { return sampled_.grid; }
  double norm() const { return norm_; }

  // |psi|^2 on the sampling grid.
  RealField1D density() const;

 private:
  Wavefunction(Space space, Evaluator ev, ComplexField1D sampled, double norm)
      : space_(space), evaluator_(std::move(ev)), sampled_(std::move(sampled)), norm_(norm) {}

  Space space_;
  Evaluator evaluator_;
  ComplexField1D sampled_;
  double norm_;
};

// Coefficients over harmonic-oscillator levels m = 0..size-1.
struct BasisExpansion {
  std::vector<std::complex<double>> coefficients;

  double norm_squared() const;
};

/// Physicists' Hermite polynomial H_n(x) via H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite(int n, double x);

/// Normalized Hermite function pi^{-1/4} (2^n n!)^{-1/2} H_n(x) e^{-x^2/2}, evaluated with
/// the normalized recurrence so that large n does not overflow.
double hermite_function(int n, double x);

/// <m| x^4 |n> in the harmonic-oscillator basis (ladder-operator closed forms).
double x4_matrix_element(int m, int n);

Wavefunction ho_eigenstate(int n, Space space, const GridSpec1D& grid = GridSpec1D());

/// Closed-form first-order states for n = 0, 1 in either space.
Wavefunction aho_wavefunction(const OscillatorSpec& spec, Space space,
                              const GridSpec1D& grid = GridSpec1D());

/// First-order Rayleigh-Schroedinger coefficients c_m = <m|(lambda/4)x^4|n>/(n - m), c_n = 1,
/// normalized.
BasisExpansion perturbed_expansion(const OscillatorSpec& spec);

Wavefunction perturbed_state_general(const OscillatorSpec& spec, Space space,
                                     const GridSpec1D& grid = GridSpec1D());

/// The state used by the measure pipeline: closed forms for n in {0, 1}, the general
/// expansion otherwise.
Wavefunction oscillator_state(const OscillatorSpec& spec, Space space,
                              const GridSpec1D& grid = GridSpec1D());

/// phi(p) = (2 pi)^{-1/2} \int psi(x) e^{-ipx} dx by Simpson quadrature over psi's grid,
/// sampled on `momentum_grid` and normalized there.
Wavefunction fourier_transform(const Wavefunction& psi, const GridSpec1D& momentum_grid);
inline Wavefunction fourier_transform(const Wavefunction& psi) {
  return fourier_transform(psi, psi.grid());
}

}  // namespace psinfo

#endif  // PSINFO_STATES_HPP
