#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "cattaneo/fit.hpp"
#include "cattaneo/spectrum.hpp"
#include "cattaneo/wnorm.hpp"

namespace cattaneo {

/// Complex amplitudes of one mode over the state (u, v, theta, q).
struct ModalState {
  std::complex<double> u, v, theta, q;
  Eigen::Vector4cd vec() const { return {u, v, theta, q}; }
  static ModalState from(const Eigen::Vector4cd& x) {
    return {x(0), x(1), x(2), x(3)};
  }
};

/// Cached propagator for one modal block: eigendecomposition when the
/// eigenvector basis is well conditioned, scaling-and-squaring otherwise.
class ModeEvolver {
 public:
  ModeEvolver(const ParameterPoint& point, double mu);

  Mat4c exponential(double t) const;  // exp(t A)
  ModalState apply(const ModalState& s, double t) const;
  const ModalBlock& block() const { return blk_; }
  double eigvec_condition() const { return cond_; }
  double max_abs_eigenvalue() const;

  static constexpr double kConditionLimit = 1e8;

 private:
  ModalBlock blk_;
  Mat4c v_, vinv_;
  Eigen::Vector4cd evals_;
  double cond_ = 0.0;
  bool use_eig_ = false;
};

/// exp(t A_mu) applied to one modal state (t >= 0, well-posed point).
ModalState evolve_mode(const ParameterPoint& point, double mu,
                       const ModalState& s, double t);

using ModeData = std::vector<std::pair<double, ModalState>>;  // (mu, state)

/// Total energy 1/2 sum (sigma mu |u|^2 + (1+m mu^g)|v|^2 + |theta|^2 + tau|q|^2).
double energy(const ParameterPoint& point, const ModeData& modes);

struct DissipationCheck {
  double residual = 0.0;     // |dE/dt + sum |q|^2| at t
  double dEdt = 0.0;         // central difference with step h
  double dissipation = 0.0;  // sum |q(t)|^2
  bool step_warning = false; // h exceeded 0.1 / max|eigenvalue|
};

/// Central-difference check of the dissipation identity dE/dt = -|q|^2;
/// the residual is O(h^2).
DissipationCheck dissipation_residual(const ParameterPoint& point,
                                      const ModeData& modes, double t, double h);

struct EnergyTrace {
  std::vector<double> times;     // ascending
  std::vector<double> energies;  // non-increasing along trajectories
  std::vector<double> q_norms;
};

EnergyTrace trace_energy(const ParameterPoint& point, const ModeData& modes,
                         const std::vector<double>& times);

struct SemigroupNormSample {
  double t = 0.0;
  double norm = 0.0;
  int argmax_index = -1;  // position in the mode list
};

/// sup over the supplied modes of the weighted norm of exp(t A_mu) A_mu^{-1};
/// exact for the block-diagonal restriction, a lower bound for the full
/// operator. Throws std::domain_error when beta < 2 alpha - 1 (0 in the
/// spectrum of the full operator).
SemigroupNormSample semigroup_norm(const ParameterPoint& point, double t,
                                   const std::vector<double>& modes);

/// Norm sweep over many times with per-mode propagators built once.
std::vector<SemigroupNormSample> semigroup_norm_series(
    const ParameterPoint& point, const std::vector<double>& times,
    const std::vector<double>& modes);

struct DecayFit {
  LineFit powerlaw;            // log value against log t inside the window
  LineFit exponential_model;   // log value against t (diagnostic alternative)
  bool exponential_preferred = false;
  double order() const { return -powerlaw.slope; }
};

/// Windowed decay-order fit of a positive series; the exponential model is
/// fitted alongside and flagged when it explains the window better.
/// Requires at least 5 samples inside [t_lo, t_hi].
DecayFit decay_fit(const std::vector<double>& times,
                   const std::vector<double>& values, double t_lo, double t_hi);

}  // namespace cattaneo
