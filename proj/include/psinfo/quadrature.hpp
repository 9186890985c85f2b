#ifndef PSINFO_QUADRATURE_HPP
#define PSINFO_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <Eigen/Dense>

namespace psinfo {

// Uniform grid on [min, max] with an odd number of points (composite Simpson).
class GridSpec1D {
 public:
  GridSpec1D() : GridSpec1D(-8.0, 8.0, 513) {}
  GridSpec1D(double min, double max, Eigen::Index points)
      : min_(min), max_(max), points_(points) {
    if (!(std::isfinite(min) && std::isfinite(max)) || !(max > min)) {
      throw std::invalid_argument("GridSpec1D: require finite max > min");
    }
    if (points < 3 || points % 2 == 0) {
      throw std::invalid_argument("GridSpec1D: point count must be odd and >= 3, got " +
                                  std::to_string(points));
    }
  }

  double min() const { return min_; }
  double max() const { return max_; }
  Eigen::Index points() const { return points_; }
  double step() const { return (max_ - min_) / static_cast<double>(points_ - 1); }
  double at(Eigen::Index i) const { return min_ + step() * static_cast<double>(i); }

  Eigen::VectorXd nodes() const {
    Eigen::VectorXd v(points_);
    for (Eigen::Index i = 0; i < points_; ++i) v(i) = at(i);
    return v;
  }

  // Composite Simpson weights h/3 * (1, 4, 2, 4, ..., 2, 4, 1).
  Eigen::VectorXd simpson_weights() const {
    Eigen::VectorXd w(points_);
    const double h3 = step() / 3.0;
    for (Eigen::Index i = 0; i < points_; ++i) {
      w(i) = (i == 0 || i == points_ - 1) ? h3 : ((i % 2 == 1) ? 4.0 * h3 : 2.0 * h3);
    }
    return w;
  }

  bool operator==(const GridSpec1D& other) const {
    return min_ == other.min_ && max_ == other.max_ && points_ == other.points_;
  }

 private:
  double min_;
  double max_;
  Eigen::Index points_;
};

struct GridSpec2D {
  GridSpec1D x;
  GridSpec1D p;

  bool operator==(const GridSpec2D& other) const = default;
};

inline GridSpec2D default_grid() { return {GridSpec1D(), GridSpec1D()}; }

namespace detail {

template <typename Scalar>
bool is_finite(const Scalar& v) {
  if constexpr (std::is_arithmetic_v<Scalar>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

}  // namespace detail

template <typename Scalar>
struct SampledField1D {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  GridSpec1D grid;
  Vector values;

  SampledField1D(GridSpec1D g, Vector v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.points()) {
      throw std::invalid_argument("SampledField1D: value count does not match grid");
    }
  }

  template <typename F>
  static SampledField1D sample(const GridSpec1D& g, F&& f) {
    Vector v(g.points());
    for (Eigen::Index i = 0; i < g.points(); ++i) v(i) = static_cast<Scalar>(f(g.at(i)));
    return SampledField1D(g, std::move(v));
  }
};

// values(i, j) holds f(x_i, p_j).
template <typename Scalar>
struct SampledField2D {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  GridSpec2D grid;
  Matrix values;

  SampledField2D(GridSpec2D g, Matrix v) : grid(g), values(std::move(v)) {
    if (values.rows() != grid.x.points() || values.cols() != grid.p.points()) {
      throw std::invalid_argument("SampledField2D: value shape does not match grid");
    }
  }

  template <typename F>
  static SampledField2D sample(const GridSpec2D& g, F&& f) {
    Matrix v(g.x.points(), g.p.points());
    for (Eigen::Index i = 0; i < g.x.points(); ++i) {
      const double x = g.x.at(i);
      for (Eigen::Index j = 0; j < g.p.points(); ++j) v(i, j) = static_cast<Scalar>(f(x, g.p.at(j)));
    }
    return SampledField2D(g, std::move(v));
  }
};

using RealField1D = SampledField1D<double>;
using ComplexField1D = SampledField1D<std::complex<double>>;
using RealField2D = SampledField2D<double>;
using ComplexField2D = SampledField2D<std::complex<double>>;

template <typename Derived>
void require_finite(const Eigen::DenseBase<Derived>& values, const char* where) {
  for (Eigen::Index j = 0; j < values.cols(); ++j) {
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
      if (!detail::is_finite(values(i, j))) {
        std::string idx = values.cols() == 1 ? std::to_string(i)
                                             : std::to_string(i) + "," + std::to_string(j);
        throw std::domain_error(std::string(where) + ": non-finite sample at index " + idx);
      }
    }
  }
}

// Integral of samples[first..last] (first <= last, last - first even) as a sum of
// Simpson panels accumulated from the right end.
template <typename Derived>
typename Derived::Scalar simpson_panels(const Eigen::MatrixBase<Derived>& f, double h,
                                        Eigen::Index first, Eigen::Index last) {
  using Scalar = typename Derived::Scalar;
  Scalar acc(0);
  for (Eigen::Index k = last; k > first; k -= 2) {
    acc += (h / 3.0) * (f(k - 2) + 4.0 * f(k - 1) + f(k));
  }
  return acc;
}

template <typename Scalar>
Scalar integrate_1d(const SampledField1D<Scalar>& f) {
  require_finite(f.values, "integrate_1d");
  return simpson_panels(f.values, f.grid.step(), 0, f.grid.points() - 1);
}

template <typename Scalar>
Scalar integrate_2d(const SampledField2D<Scalar>& f) {
  require_finite(f.values, "integrate_2d");
  const Eigen::VectorXd wx = f.grid.x.simpson_weights();
  const Eigen::VectorXd wp = f.grid.p.simpson_weights();
  return (wx.cast<Scalar>().transpose() * f.values * wp.cast<Scalar>())(0, 0);
}

// s(i) = integral from node i to the right end, for every node. s(0) is bit-identical
// to integrate_1d. Odd offsets close with the half-panel rule h/12 (-f0 + 8 f1 + 5 f2).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> suffix_integral(
    const Eigen::MatrixBase<Derived>& f, double h) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = f.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> s(n);
  s(n - 1) = Scalar(0);
  Scalar acc(0);
  for (Eigen::Index k = n - 1; k > 0; k -= 2) {
    acc += (h / 3.0) * (f(k - 2) + 4.0 * f(k - 1) + f(k));
    s(k - 2) = acc;
  }
  for (Eigen::Index i = n - 2; i > 0; i -= 2) {
    s(i) = s(i + 1) + (h / 12.0) * (-f(i - 1) + 8.0 * f(i) + 5.0 * f(i + 1));
  }
  return s;
}

// Extent X where the Gaussian envelope exp(-(X/decay_scale)^2) drops to tolerance.
inline double tail_extent(double decay_scale, double tolerance) {
  if (!(decay_scale > 0.0)) throw std::invalid_argument("tail_extent: decay_scale must be > 0");
  if (!(tolerance > 0.0 && tolerance < 1.0)) {
    throw std::invalid_argument("tail_extent: tolerance must lie in (0, 1)");
  }
  return decay_scale * std::sqrt(-std::log(tolerance));
}

}  // namespace psinfo

#endif  // PSINFO_QUADRATURE_HPP
