#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "cattaneo/roots.hpp"

namespace cattaneo {

/// Polynomial roots as eigenvalues of the balanced companion matrix
/// (dense QR). Independent of the closed-form production path; used as the
/// cross-check oracle, never as the solver behind it.
RootSet companion_roots(const QuarticCoeffs& q);

/// Eigenvalues of a real 4x4 matrix via the dense general eigensolver.
std::array<std::complex<double>, 4> matrix_eigenvalues(const Eigen::Matrix4d& a);

/// Min over pairings of the max per-root deviation |a_i - b_p(i)|, scaled by
/// the larger magnitude (floored at 1e-12).
double rootset_distance(const RootSet& a, const RootSet& b);

}  // namespace cattaneo
