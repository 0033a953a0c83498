#include "gamma/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

namespace gamma {

int max_threads() {
  int limit = 1;
#ifdef _OPENMP
  limit = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("GAMMA_MODELS_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) limit = std::min(limit, cap);
  }
  return limit;
}

namespace {

constexpr Eigen::Index kPointBlock = 256;

// Monomial values for one block of points: terms x blocksize.
CMat monomial_block(const Eigen::MatrixXi& exps, const CMat& points,
                    Eigen::Index begin, Eigen::Index count) {
  const Eigen::Index terms = exps.rows();
  const Eigen::Index nvars = exps.cols();
  int maxexp = 0;
  for (Eigen::Index t = 0; t < terms; ++t)
    for (Eigen::Index v = 0; v < nvars; ++v) maxexp = std::max(maxexp, exps(t, v));

  CMat vals(terms, count);
  std::vector<Cx> pow(static_cast<std::size_t>(nvars) * (maxexp + 1));
  for (Eigen::Index p = 0; p < count; ++p) {
    for (Eigen::Index v = 0; v < nvars; ++v) {
      Cx* row = pow.data() + v * (maxexp + 1);
      row[0] = Cx(1, 0);
      for (int e = 1; e <= maxexp; ++e) row[e] = row[e - 1] * points(begin + p, v);
    }
    for (Eigen::Index t = 0; t < terms; ++t) {
      Cx m(1, 0);
      for (Eigen::Index v = 0; v < nvars; ++v)
        m *= pow[static_cast<std::size_t>(v) * (maxexp + 1) + exps(t, v)];
      vals(t, p) = m;
    }
  }
  return vals;
}

void sup_update_block(const Eigen::MatrixXi& exps, const CMat& points,
                      const CMat& coeffs, Eigen::Index begin, Eigen::Index count,
                      RVec& acc) {
  const CMat vals = monomial_block(exps, points, begin, count);
  const CMat trial_vals = coeffs * vals;  // ntrials x count
  for (Eigen::Index j = 0; j < count; ++j)
    acc = acc.cwiseMax(trial_vals.col(j).cwiseAbs());
}

}  // namespace

RVec poly_sup_over_points_serial(const Eigen::MatrixXi& exps, const CMat& points,
                                 const CMat& coeffs) {
  const Eigen::Index npoints = points.rows();
  RVec acc = RVec::Zero(coeffs.rows());
  for (Eigen::Index begin = 0; begin < npoints; begin += kPointBlock)
    sup_update_block(exps, points, coeffs, begin,
                     std::min(kPointBlock, npoints - begin), acc);
  return acc;
}

RVec poly_sup_over_points(const Eigen::MatrixXi& exps, const CMat& points,
                          const CMat& coeffs) {
  const Eigen::Index npoints = points.rows();
  const Eigen::Index nblocks = (npoints + kPointBlock - 1) / kPointBlock;
  const int threads = max_threads();
  if (threads == 1 || nblocks <= 1)
    return poly_sup_over_points_serial(exps, points, coeffs);

  std::vector<RVec> partial(static_cast<std::size_t>(threads),
                            RVec::Zero(coeffs.rows()));
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
  {
    RVec& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (Eigen::Index b = 0; b < nblocks; ++b) {
      const Eigen::Index begin = b * kPointBlock;
      sup_update_block(exps, points, coeffs, begin,
                       std::min(kPointBlock, npoints - begin), acc);
    }
  }
#else
  for (Eigen::Index b = 0; b < nblocks; ++b) {
    const Eigen::Index begin = b * kPointBlock;
    sup_update_block(exps, points, coeffs, begin,
                     std::min(kPointBlock, npoints - begin), partial[0]);
  }
#endif
  RVec acc = partial[0];
  for (std::size_t t = 1; t < partial.size(); ++t) acc = acc.cwiseMax(partial[t]);
  return acc;
}

namespace {

double radius_at_angle(const CMat& a, double theta) {
  const Cx phase(std::cos(theta), std::sin(theta));
  const CMat h = herm_part(phase * a);
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

}  // namespace

double radius_sweep_serial(const CMat& a, int angles) {
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < angles; ++k)
    best = std::max(best, radius_at_angle(a, 2.0 * std::numbers::pi * k / angles));
  return best;
}

double radius_sweep(const CMat& a, int angles) {
  std::vector<double> vals(static_cast<std::size_t>(angles));
  parallel_for(angles, [&](std::ptrdiff_t k) {
    vals[static_cast<std::size_t>(k)] =
        radius_at_angle(a, 2.0 * std::numbers::pi * static_cast<double>(k) / angles);
  });
  return *std::max_element(vals.begin(), vals.end());
}

}  // namespace gamma
