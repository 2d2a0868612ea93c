#include "cattaneo/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cattaneo {

RootSet companion_roots(const QuarticCoeffs& q) {
  if (q.c4 == 0.0) throw std::domain_error("companion: zero leading coefficient");
  Eigen::Matrix4d comp = Eigen::Matrix4d::Zero();
  comp(0, 3) = -q.c0 / q.c4;
  comp(1, 3) = -q.c1 / q.c4;
  comp(2, 3) = -q.c2 / q.c4;
  comp(3, 3) = -q.c3 / q.c4;
  comp(1, 0) = comp(2, 1) = comp(3, 2) = 1.0;
  Eigen::EigenSolver<Eigen::Matrix4d> es(comp, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("companion: eigensolver failed");
  RootSet roots;
  for (int i = 0; i < 4; ++i) roots[i] = es.eigenvalues()(i);
  std::sort(roots.begin(), roots.end(), [](const auto& u, const auto& v) {
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
  });
  return roots;
}

std::array<std::complex<double>, 4> matrix_eigenvalues(const Eigen::Matrix4d& a) {
  Eigen::EigenSolver<Eigen::Matrix4d> es(a, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("matrix eigensolver failed");
  std::array<std::complex<double>, 4> ev;
  for (int i = 0; i < 4; ++i) ev[i] = es.eigenvalues()(i);
  return ev;
}

double rootset_distance(const RootSet& a, const RootSet& b) {
  std::array<int, 4> perm = {0, 1, 2, 3};
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      double scale = std::max({std::abs(a[i]), std::abs(b[perm[i]]), 1e-12});
      worst = std::max(worst, std::abs(a[i] - b[perm[i]]) / scale);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace cattaneo
