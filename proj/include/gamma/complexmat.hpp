#ifndef GAMMA_COMPLEXMAT_HPP
#define GAMMA_COMPLEXMAT_HPP

#include <Eigen/Dense>
#include <complex>

namespace gamma {

using Cx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

inline CMat adj(const CMat& a) { return a.adjoint(); }

inline CMat identity(Eigen::Index d) { return CMat::Identity(d, d); }

inline bool all_finite(const CMat& a) { return a.allFinite(); }

// Hermitian part (a + a*)/2.
inline CMat herm_part(const CMat& a) { return 0.5 * (a + a.adjoint()); }

}  // namespace gamma

#endif
