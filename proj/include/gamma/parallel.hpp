#ifndef GAMMA_PARALLEL_HPP
#define GAMMA_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gamma/complexmat.hpp"

namespace gamma {

// Thread cap: GAMMA_MODELS_THREADS wins over the OpenMP default.
int max_threads();

// Index loop over [0, n). Every iteration must be independent; results are
// written to disjoint slots so serial and parallel runs agree bitwise.
template <class F>
void parallel_for(std::ptrdiff_t n, F&& body) {
  const int threads = max_threads();
#ifdef _OPENMP
  if (threads > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    return;
  }
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

// Per-trial sup of |p(point)| over a sample set.
//
// exps    : terms x nvars exponent table
// points  : npoints x nvars complex sample points
// coeffs  : ntrials x terms coefficient rows
// returns : ntrials maxima
//
// The serial variant is the reference implementation; the parallel one
// must match it exactly (max is order-independent and every block is
// evaluated identically).
RVec poly_sup_over_points_serial(const Eigen::MatrixXi& exps, const CMat& points,
                                 const CMat& coeffs);
RVec poly_sup_over_points(const Eigen::MatrixXi& exps, const CMat& points,
                          const CMat& coeffs);

// max over a uniform angle grid of lambda_max((e^{i theta} a + h.c.)/2).
double radius_sweep_serial(const CMat& a, int angles);
double radius_sweep(const CMat& a, int angles);

}  // namespace gamma

#endif
