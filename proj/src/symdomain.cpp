#include "gamma/symdomain.hpp"

#include <cmath>
#include <numbers>

#include "gamma/errors.hpp"

namespace gamma {

Point symmetrize(const Point& z) {
  const Eigen::Index n = z.size();
  if (n < 1) fail(ErrorCode::DimensionMismatch, "symmetrize needs at least one coordinate");
  if (!z.allFinite()) fail(ErrorCode::NonFiniteInput, "non-finite coordinate");

  // Incremental expansion of prod_j (t + z_j): e[i] holds s_i after each step.
  CVec e = CVec::Zero(n + 1);
  e(0) = Cx(1, 0);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = j + 1; i >= 1; --i) e(i) += z(j) * e(i - 1);
  return e.tail(n);
}

CVec preimage_roots(const Point& s) {
  const Eigen::Index n = s.size();
  if (!s.allFinite()) fail(ErrorCode::NonFiniteInput, "non-finite coordinate");
  if (n == 1) {
    CVec r(1);
    r(0) = s(0);
    return r;
  }
  // Companion matrix of q(t) = t^n - s_1 t^{n-1} + ... + (-1)^n s_n.
  CMat comp = CMat::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) comp(i, i - 1) = Cx(1, 0);
  double sign = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    comp(i, n - 1) = sign * s(n - 1 - i);
    sign = -sign;
  }
  Eigen::ComplexEigenSolver<CMat> es(comp, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    fail(ErrorCode::TriangularizationFailed, "companion eigenvalue iteration failed");
  return es.eigenvalues();
}

double membership_slack(const Point& s, Region region) {
  const CVec roots = preimage_roots(s);
  double slack = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    const double m = std::abs(roots(i));
    double v = 0.0;
    switch (region) {
      case Region::Gamma_n: v = m - 1.0; break;
      case Region::G_n: v = m - 1.0; break;
      case Region::bGamma_n: v = std::abs(m - 1.0); break;
    }
    slack = std::max(slack, v);
  }
  return slack;
}

bool membership(const Point& s, Region region, double tol) {
  if (tol <= 0) fail(ErrorCode::ConfigError, "tol must be positive");
  const double slack = membership_slack(s, region);
  switch (region) {
    case Region::Gamma_n: return slack <= tol;
    case Region::G_n: return slack < -tol;
    case Region::bGamma_n: return slack <= tol;
  }
  return false;
}

DomainSample sample_boundary(int n, int density, SampleMode mode, Rng& rng,
                             std::int64_t budget) {
  if (n < 1) fail(ErrorCode::ConfigError, "n must be at least 1");
  if (density < 1) fail(ErrorCode::ConfigError, "density must be at least 1");

  DomainSample out;
  out.mode = mode;
  out.density = density;

  if (mode == SampleMode::Grid) {
    std::int64_t total = 1;
    for (int k = 0; k < n; ++k) {
      total *= density;
      if (total > budget)
        fail(ErrorCode::SampleBudgetExceeded,
             "grid of density^" + std::to_string(n) + " points exceeds sample budget");
    }
    out.points.reserve(static_cast<std::size_t>(total));
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    Point z(n);
    for (std::int64_t c = 0; c < total; ++c) {
      for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * idx[static_cast<std::size_t>(k)] / density;
        z(k) = Cx(std::cos(theta), std::sin(theta));
      }
      out.points.push_back(symmetrize(z));
      for (int k = n - 1; k >= 0; --k) {
        if (++idx[static_cast<std::size_t>(k)] < density) break;
        idx[static_cast<std::size_t>(k)] = 0;
      }
    }
  } else {
    out.points.reserve(static_cast<std::size_t>(density));
    Point z(n);
    for (int c = 0; c < density; ++c) {
      for (int k = 0; k < n; ++k) z(k) = rng.unimodular();
      out.points.push_back(symmetrize(z));
    }
  }
  return out;
}

}  // namespace gamma
