#ifndef GAMMA_RNG_HPP
#define GAMMA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "gamma/complexmat.hpp"

namespace gamma {

// Seeded generator handed around explicitly so every certification and
// corpus recipe is reproducible from (seed, params) alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

  double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  // Standard complex Gaussian: independent N(0, 1/2) real and imaginary parts.
  Cx cgaussian() {
    const double s = std::numbers::sqrt2 / 2.0;
    return Cx(s * gaussian(), s * gaussian());
  }

  Cx unimodular() {
    const double t = uniform(0.0, 2.0 * std::numbers::pi);
    return Cx(std::cos(t), std::sin(t));
  }

  // Uniform on the closed unit disc.
  Cx disc_point() { return std::sqrt(uniform()) * unimodular(); }

  CMat gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    CMat a(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = cgaussian();
    return a;
  }

  // Haar-distributed unitary via QR of a Gaussian matrix.
  CMat haar_unitary(Eigen::Index d) {
    CMat a = gaussian_matrix(d, d);
    Eigen::HouseholderQR<CMat> qr(a);
    CMat q = qr.householderQ() * CMat::Identity(d, d);
    CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < d; ++j) {
      Cx diag = r(j, j);
      q.col(j) *= (std::abs(diag) > 0) ? diag / std::abs(diag) : Cx(1, 0);
    }
    return q;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gamma

#endif
