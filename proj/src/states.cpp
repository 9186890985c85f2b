#include "psinfo/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace psinfo {

namespace {

using cplx = std::complex<double>;

// (-i)^m, the momentum-space phase of the m-th Hermite function.
cplx momentum_phase(int m) {
  switch (m % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

}  // namespace

void OscillatorSpec::validate() const {
  if (n < 0) throw std::invalid_argument("OscillatorSpec: n must be non-negative");
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw std::invalid_argument("OscillatorSpec: lambda must be finite and >= 0");
  }
}

std::string OscillatorSpec::describe() const {
  std::ostringstream os;
  os << "n=" << n << " lambda=" << lambda;
  return os.str();
}

std::string to_string(Space space) { return space == Space::position ? "position" : "momentum"; }

Wavefunction Wavefunction::normalized(Space space, Evaluator raw, const GridSpec1D& grid) {
  ComplexField1D sampled = ComplexField1D::sample(grid, raw);
  const RealField1D dens(grid, sampled.values.cwiseAbs2());
  const double norm = std::sqrt(integrate_1d(dens));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::domain_error("Wavefunction: evaluator has zero or non-finite norm on the grid");
  }
  sampled.values /= norm;
  Evaluator scaled = [raw = std::move(raw), inv = 1.0 / norm](double x) { return raw(x) * inv; };
  return Wavefunction(space, std::move(scaled), std::move(sampled), norm);
}

RealField1D Wavefunction::density() const {
  return RealField1D(sampled_.grid, sampled_.values.cwiseAbs2());
}

double BasisExpansion::norm_squared() const {
  double s = 0.0;
  for (const auto& c : coefficients) s += std::norm(c);
  return s;
}

double hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite: n must be non-negative");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_function(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_function: n must be non-negative");
  double prev = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (n == 0) return prev;
  double cur = std::sqrt(2.0) * x * prev;
  for (int k = 1; k < n; ++k) {
    const double next =
        std::sqrt(2.0 / (k + 1.0)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double x4_matrix_element(int m, int n) {
  if (m < 0 || n < 0) return 0.0;
  if (m < n) std::swap(m, n);
  const double k = n;
  switch (m - n) {
    case 0: return (6.0 * k * k + 6.0 * k + 3.0) / 4.0;
    case 2: return (2.0 * k + 3.0) * std::sqrt((k + 1.0) * (k + 2.0)) / 2.0;
    case 4: return std::sqrt((k + 1.0) * (k + 2.0) * (k + 3.0) * (k + 4.0)) / 4.0;
    default: return 0.0;
  }
}

Wavefunction ho_eigenstate(int n, Space space, const GridSpec1D& grid) {
  if (n < 0) throw std::invalid_argument("ho_eigenstate: n must be non-negative");
  const cplx phase = space == Space::momentum ? momentum_phase(n) : cplx(1.0, 0.0);
  return Wavefunction::normalized(
      space, [n, phase](double q) { return phase * hermite_function(n, q); }, grid);
}

Wavefunction aho_wavefunction(const OscillatorSpec& spec, Space space, const GridSpec1D& grid) {
  spec.validate();
  const double lam = spec.lambda;
  Evaluator raw;
  if (spec.n == 0 && space == Space::position) {
    raw = [lam](double x) -> cplx {
      const double x2 = x * x;
      const double poly =
          1.0 - lam / 4.0 * (0.25 * (4.0 * x2 * x2 - 12.0 * x2 + 3.0) + 3.0 * (2.0 * x2 - 1.0));
      return poly * std::exp(-0.5 * x2);
    };
  } else if (spec.n == 0) {
    raw = [lam](double p) -> cplx {
      const double p2 = p * p;
      return (16.0 - lam * (4.0 * p2 * p2 - 36.0 * p2 + 15.0)) * std::exp(-0.5 * p2);
    };
  } else if (spec.n == 1 && space == Space::position) {
    raw = [lam](double x) -> cplx {
      const double x2 = x * x;
      const double poly =
          1.0 - lam / 32.0 * (10.0 * (2.0 * x2 - 3.0) + 0.5 * (4.0 * x2 * x2 - 20.0 * x2 + 15.0));
      return poly * x * std::exp(-0.5 * x2);
    };
  } else if (spec.n == 1) {
    // Printed prefactor is imaginary; the global phase is dropped.
    raw = [lam](double p) -> cplx {
      const double p2 = p * p;
      const double poly = 4.0 * p2 * p2 * lam - 60.0 * p2 * lam + 75.0 * lam - 64.0;
      return poly * p * std::exp(-0.5 * p2);
    };
  } else {
    throw std::invalid_argument(
        "aho_wavefunction: closed forms exist only for n in {0, 1}; use perturbed_state_general");
  }
  return Wavefunction::normalized(space, std::move(raw), grid);
}

BasisExpansion perturbed_expansion(const OscillatorSpec& spec) {
  spec.validate();
  const int n = spec.n;
  BasisExpansion e;
  e.coefficients.assign(static_cast<std::size_t>(n + 5), cplx(0.0, 0.0));
  e.coefficients[static_cast<std::size_t>(n)] = 1.0;
  for (int m : {n - 4, n - 2, n + 2, n + 4}) {
    if (m < 0) continue;
    const double c = 0.25 * spec.lambda * x4_matrix_element(m, n) / static_cast<double>(n - m);
    e.coefficients[static_cast<std::size_t>(m)] = c;
  }
  const double norm = std::sqrt(e.norm_squared());
  for (auto& c : e.coefficients) c /= norm;
  return e;
}

Wavefunction perturbed_state_general(const OscillatorSpec& spec, Space space,
                                     const GridSpec1D& grid) {
  const BasisExpansion e = perturbed_expansion(spec);
  std::vector<std::pair<int, cplx>> terms;
  for (std::size_t m = 0; m < e.coefficients.size(); ++m) {
    if (e.coefficients[m] == cplx(0.0, 0.0)) continue;
    const int level = static_cast<int>(m);
    const cplx phase = space == Space::momentum ? momentum_phase(level) : cplx(1.0, 0.0);
    terms.emplace_back(level, e.coefficients[m] * phase);
  }
  return Wavefunction::normalized(
      space,
      [terms = std::move(terms)](double q) {
        cplx acc(0.0, 0.0);
        for (const auto& [m, c] : terms) acc += c * hermite_function(m, q);
        return acc;
      },
      grid);
}

Wavefunction oscillator_state(const OscillatorSpec& spec, Space space, const GridSpec1D& grid) {
  if (spec.n == 0 || spec.n == 1) return aho_wavefunction(spec, space, grid);
  return perturbed_state_general(spec, space, grid);
}

Wavefunction fourier_transform(const Wavefunction& psi, const GridSpec1D& momentum_grid) {
  if (psi.space() != Space::position) {
    throw std::invalid_argument("fourier_transform: input must be a position-space wavefunction");
  }
  const GridSpec1D xg = psi.grid();
  const Eigen::VectorXd x = xg.nodes();
  const Eigen::VectorXcd weighted =
      xg.simpson_weights().cast<cplx>().cwiseProduct(psi.sampled().values) /
      std::sqrt(2.0 * std::numbers::pi);
  Evaluator raw = [x, weighted](double p) {
    cplx acc(0.0, 0.0);
    for (Eigen::Index i = 0; i < x.size(); ++i) acc += weighted(i) * std::polar(1.0, -p * x(i));
    return acc;
  };
  return Wavefunction::normalized(Space::momentum, std::move(raw), momentum_grid);
}

}  // namespace psinfo
