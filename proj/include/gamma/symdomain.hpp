#ifndef GAMMA_SYMDOMAIN_HPP
#define GAMMA_SYMDOMAIN_HPP

#include <cstdint>
#include <vector>

#include "gamma/complexmat.hpp"
#include "gamma/rng.hpp"

namespace gamma {

// A point of C^n, either in plain coordinates z or in symmetrized
// coordinates s = (s_1, ..., s_n). Dimensionless complex entries.
using Point = CVec;

enum class Region { Gamma_n, G_n, bGamma_n };

enum class SampleMode { Grid, Random };

struct DomainSample {
  std::vector<Point> points;  // symmetrized coordinates
  SampleMode mode = SampleMode::Grid;
  int density = 0;  // grid resolution per torus dimension, or sample count
};

// Elementary symmetric functions (s_1, ..., s_n) of the entries of z.
// s_0 = 1 by convention and is not stored.
Point symmetrize(const Point& z);

// Zeros of q(t) = t^n - s_1 t^{n-1} + s_2 t^{n-2} - ... + (-1)^n s_n,
// computed as companion-matrix eigenvalues. These are exactly the preimage
// coordinates of s under the symmetrization map.
CVec preimage_roots(const Point& s);

// Root criterion: s lies in the region iff all zeros of q satisfy
//   Gamma_n : |t| <= 1 + tol
//   G_n     : |t| <  1 - tol
//   bGamma_n: ||t| - 1| <= tol
bool membership(const Point& s, Region region, double tol = 1e-8);

// Largest deviation of the root moduli from the region constraint; <= 0
// means membership holds with margin.
double membership_slack(const Point& s, Region region);

// Symmetrized images of torus points. Grid mode enumerates the density^n
// uniform torus grid, random mode draws `density` i.i.d. uniform torus
// points. Grid mode refuses to enumerate more than `budget` points.
DomainSample sample_boundary(int n, int density, SampleMode mode, Rng& rng,
                             std::int64_t budget = (std::int64_t{1} << 24));

}  // namespace gamma

#endif
