#pragma once

#include <vector>

#include "cattaneo/fit.hpp"
#include "cattaneo/types.hpp"

namespace cattaneo {

enum class Envelope { Discrete, Continuous };

/// Weighted operator norm of (i lambda I - A_mu)^{-1} on one modal block.
/// Throws std::domain_error when the shifted block is numerically singular.
double modal_resolvent_norm(const ParameterPoint& point, double mu,
                            double lambda);

struct ResolventSample {
  double lambda = 0.0;
  double norm = 0.0;
  double argmax_mu = 0.0;
};

/// Sup of the modal resolvent norm over the mode list; the continuous
/// envelope adds a golden-section refinement in mu between the modes
/// bracketing the discrete argmax.
ResolventSample resolvent_sup(const ParameterPoint& point, double lambda,
                              const std::vector<double>& modes,
                              Envelope envelope = Envelope::Continuous);

struct ResolventGrowth {
  LineFit fit;  // log norm against log lambda
  std::vector<ResolventSample> samples;
};

/// Growth of the resolvent sup along the imaginary axis over a log grid of
/// `count` frequencies in [lambda_lo, lambda_hi]. Each frequency is moved
/// onto the critical eigenvalue branch (where the sup is attained) before
/// sampling; frequencies unreachable within the mode range are skipped.
/// Slope approaches 1/k on a polynomial region of order k, and stays near 0
/// on the exponentially stable sets.
ResolventGrowth growth_exponent(const ParameterPoint& point, double lambda_lo,
                                double lambda_hi, int count,
                                const std::vector<double>& modes,
                                Envelope envelope = Envelope::Continuous);

}  // namespace cattaneo
