#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "cattaneo/roots.hpp"
#include "cattaneo/types.hpp"

namespace cattaneo {

/// Restriction of the evolution generator to one eigenvector of A with
/// eigenvalue mu, acting on the modal state (u, v, theta, q). `weights`
/// carries the modal inner-product diagonal (sigma*mu, 1+m*mu^gamma, 1, tau).
struct ModalBlock {
  double mu = 1.0;
  Eigen::Matrix4d matrix = Eigen::Matrix4d::Zero();
  Eigen::Vector4d weights = Eigen::Vector4d::Ones();
};

ModalBlock modal_block(const ParameterPoint& point, double mu);

/// Coefficients of the modal characteristic quartic
///   (m tau mu^g + tau) L^4 + (m mu^g + 1) L^3
///   + (tau mu^{2a} + m mu^{b+g} + sigma tau mu + mu^b) L^2
///   + (mu^{2a} + sigma mu) L + sigma mu^{1+b}.
QuarticCoeffs characteristic_coeffs(const ParameterPoint& point, double mu);

/// Quartic roots of the modal block, cross-checked against the dense 4x4
/// eigensolver to 1e-6 relative; a mismatch throws std::runtime_error (it
/// would indicate a coefficient derivation bug).
RootSet modal_eigenvalues(const ParameterPoint& point, double mu);

/// One leading-order eigenvalue branch, -re_coef*mu^re_exp as the real part
/// and (for conjugate pairs) +-i im_coef*mu^im_exp as the imaginary parts.
struct Branch {
  double re_coef = 0, re_exp = 0;
  double im_coef = 0, im_exp = 0;
  bool is_pair() const { return im_coef != 0.0; }
  std::complex<double> upper(double mu) const;
};

/// Ascending roots of j^3 + 29 j^2 + 115 j - 81, the constants entering the
/// corner-point branch row; computed once by the cubic solver.
const std::array<double, 3>& corner_cubic_roots();

/// Branch table row for the region at sigma=2, tau=1, m in {1,0} (matching
/// the label's atlas). Two pair branches per row, except the out-of-theory
/// rows which carry one pair plus two real branches.
/// Throws std::domain_error for unsupported points or labels.
std::vector<Branch> predicted_branches(RegionLabel region,
                                       const ParameterPoint& point);

/// Branch values at one mu; pairs expand to their upper representative only.
std::vector<std::complex<double>> predicted_roots(RegionLabel region,
                                                  const ParameterPoint& point,
                                                  double mu);

struct BranchError {
  int branch = -1;                 // index into the row's branch list
  std::complex<double> computed;   // upper-half representative
  std::complex<double> predicted;
  double err_re = 0.0;             // relative error of the real part
  double err_im = 0.0;             // relative error of |Im|, pairs only
  bool has_im = false;
};

struct AsymptoticSample {
  double mu = 0.0;
  std::vector<BranchError> entries;
  double max_err = 0.0;
};

/// Computed roots paired with their predicted branches at each mu
/// (nearest-neighbor in log-magnitude coordinates). Throws on structural
/// mismatch (pair/real counts) or ambiguous assignment, and requires
/// mu >= 100 so the asymptotic regime is meaningful.
std::vector<AsymptoticSample> asymptotic_error(const ParameterPoint& point,
                                               const std::vector<double>& mus);

/// Same with an explicit branch row (fault-injection and what-if entry).
std::vector<AsymptoticSample> asymptotic_error(const ParameterPoint& point,
                                               const std::vector<double>& mus,
                                               const std::vector<Branch>& row);

/// Root with the least |Re| among upper-half roots at this mu: the branch
/// that governs the decay rate on the polynomial regions.
std::complex<double> critical_root(const ParameterPoint& point, double mu);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  int n = 0;
};

/// LS slope of log(-Re) against log|Im| along the critical branch over the
/// given mu sweep; approaches -1/k for a polynomial region of order k.
/// Throws std::invalid_argument with fewer than 3 usable points.
SlopeFit optimality_exponent(const ParameterPoint& point,
                             const std::vector<double>& mus);

}  // namespace cattaneo
