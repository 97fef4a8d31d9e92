#pragma once

#include <Eigen/Dense>
#include <complex>

namespace shqmm {

using complexd = std::complex<double>;

// Dense complex matrix, row-major, 64-bit float components.
using CMatrix = Eigen::Matrix<complexd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using RMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RVector = Eigen::VectorXd;

// max_ij |A - A^dagger|, zero for exactly Hermitian input.
inline double hermiticity_residual(const CMatrix& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

inline bool is_finite(const CMatrix& a) { return a.allFinite(); }

// Largest singular value.
double spectral_norm(const CMatrix& a);

}  // namespace shqmm
