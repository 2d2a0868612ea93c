#include "cattaneo/wnorm.hpp"

#include <cmath>
#include <stdexcept>

namespace cattaneo {

namespace {

using C = std::complex<double>;

Mat4c scale_rows_cols(const Mat4c& t, const Vec4& w) {
  Mat4c out;
  for (int i = 0; i < 4; ++i) {
    const double li = std::sqrt(w(i));
    for (int j = 0; j < 4; ++j) out(i, j) = t(i, j) * (li / std::sqrt(w(j)));
  }
  return out;
}

}  // namespace

Mat4c inverse4(const Mat4c& m) {
  // 2x2 minors of the first two rows and of the last two rows
  const C s0 = m(0, 0) * m(1, 1) - m(1, 0) * m(0, 1);
  const C s1 = m(0, 0) * m(1, 2) - m(1, 0) * m(0, 2);
  const C s2 = m(0, 0) * m(1, 3) - m(1, 0) * m(0, 3);
  const C s3 = m(0, 1) * m(1, 2) - m(1, 1) * m(0, 2);
  const C s4 = m(0, 1) * m(1, 3) - m(1, 1) * m(0, 3);
  const C s5 = m(0, 2) * m(1, 3) - m(1, 2) * m(0, 3);

  const C c5 = m(2, 2) * m(3, 3) - m(3, 2) * m(2, 3);
  const C c4 = m(2, 1) * m(3, 3) - m(3, 1) * m(2, 3);
  const C c3 = m(2, 1) * m(3, 2) - m(3, 1) * m(2, 2);
  const C c2 = m(2, 0) * m(3, 3) - m(3, 0) * m(2, 3);
  const C c1 = m(2, 0) * m(3, 2) - m(3, 0) * m(2, 2);
  const C c0 = m(2, 0) * m(3, 1) - m(3, 0) * m(2, 1);

  const C det = s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;

  double scale = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) scale = std::max(scale, std::abs(m(i, j)));
  if (std::abs(det) < 1e-280 * scale * scale * scale * scale)
    throw std::domain_error("inverse4: determinant underflow");

  const C inv_det = 1.0 / det;
  Mat4c r;
  r(0, 0) = (m(1, 1) * c5 - m(1, 2) * c4 + m(1, 3) * c3) * inv_det;
  r(0, 1) = (-m(0, 1) * c5 + m(0, 2) * c4 - m(0, 3) * c3) * inv_det;
  r(0, 2) = (m(3, 1) * s5 - m(3, 2) * s4 + m(3, 3) * s3) * inv_det;
  r(0, 3) = (-m(2, 1) * s5 + m(2, 2) * s4 - m(2, 3) * s3) * inv_det;

  r(1, 0) = (-m(1, 0) * c5 + m(1, 2) * c2 - m(1, 3) * c1) * inv_det;
  r(1, 1) = (m(0, 0) * c5 - m(0, 2) * c2 + m(0, 3) * c1) * inv_det;
  r(1, 2) = (-m(3, 0) * s5 + m(3, 2) * s2 - m(3, 3) * s1) * inv_det;
  r(1, 3) = (m(2, 0) * s5 - m(2, 2) * s2 + m(2, 3) * s1) * inv_det;

  r(2, 0) = (m(1, 0) * c4 - m(1, 1) * c2 + m(1, 3) * c0) * inv_det;
  r(2, 1) = (-m(0, 0) * c4 + m(0, 1) * c2 - m(0, 3) * c0) * inv_det;
  r(2, 2) = (m(3, 0) * s4 - m(3, 1) * s2 + m(3, 3) * s0) * inv_det;
  r(2, 3) = (-m(2, 0) * s4 + m(2, 1) * s2 - m(2, 3) * s0) * inv_det;

  r(3, 0) = (-m(1, 0) * c3 + m(1, 1) * c1 - m(1, 2) * c0) * inv_det;
  r(3, 1) = (m(0, 0) * c3 - m(0, 1) * c1 + m(0, 2) * c0) * inv_det;
  r(3, 2) = (-m(3, 0) * s3 + m(3, 1) * s1 - m(3, 2) * s0) * inv_det;
  r(3, 3) = (m(2, 0) * s3 - m(2, 1) * s1 + m(2, 2) * s0) * inv_det;

  // one refinement step: r <- r + r (I - m r)
  r += r * (Mat4c::Identity() - m * r);
  return r;
}

double weighted_operator_norm(const Mat4c& t, const Vec4& w) {
  const Mat4c s = scale_rows_cols(t, w);
  Eigen::SelfAdjointEigenSolver<Mat4c> es(s.adjoint() * s);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("weighted norm: eigensolver failed");
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double weighted_operator_norm_svd(const Mat4c& t, const Vec4& w) {
  const Mat4c s = scale_rows_cols(t, w);
  Eigen::JacobiSVD<Mat4c> svd(s);
  return svd.singularValues()(0);
}

}  // namespace cattaneo
