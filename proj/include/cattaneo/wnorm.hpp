#pragma once

#include <Eigen/Dense>
#include <complex>

namespace cattaneo {

using Mat4c = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4d;

/// 4x4 complex inverse by explicit cofactors (2x2 minor expansion) plus one
/// step of iterative refinement. Throws std::domain_error when |det|
/// underflows relative to the entry scale.
Mat4c inverse4(const Mat4c& m);

/// Largest singular value of sqrt(W) * T * 1/sqrt(W) for the diagonal weight
/// vector w (all entries > 0): the operator norm induced by the weighted
/// inner product. Production path: dominant eigenvalue of the self-adjoint
/// product M^H M.
double weighted_operator_norm(const Mat4c& t, const Vec4& w);

/// Direct SVD of the same similarity transform; independent check path.
double weighted_operator_norm_svd(const Mat4c& t, const Vec4& w);

}  // namespace cattaneo
