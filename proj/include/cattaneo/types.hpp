#pragma once

#include <optional>
#include <string_view>

#include "cattaneo/rational.hpp"

namespace cattaneo {

/// One abstract thermoelastic system
///   u_tt + m A^gamma u_tt + sigma A u - A^alpha theta = 0
///   theta_t - A^{beta/2} q + A^alpha u_t = 0
///   tau q_t + q + A^{beta/2} theta = 0
/// with A self-adjoint positive definite.
struct ParameterPoint {
  double alpha = 0.0;  // coupling exponent, in [0,1]
  double beta = 0.0;   // thermal damping exponent, in [0,1]
  double gamma = 0.5;  // inertial exponent, in (0,1]; ignored when m == 0
  double m = 1.0;      // inertial coefficient, >= 0
  double sigma = 2.0;  // wave speed coefficient, > 0
  double tau = 1.0;    // thermal relaxation, > 0

  bool inertial() const { return m > 0.0; }
  void validate() const;  // throws std::domain_error on any range violation
};

/// Subregions of the parameter cube. Unstarred labels partition
/// [0,1]^2 x (0,1] (inertial case); starred labels partition [0,1]^2.
enum class RegionLabel {
  T1, T2, T3, T4, F12, F13, F14, F2, F23, L123, L124, L2, L34, P234,
  T1s, T2s, T4s, F12s, F14s, F2s, L124s, L23s, P123s,
  Unclassified,
};

bool starred(RegionLabel label);
std::string_view label_name(RegionLabel label);        // "T1", "F12*", ...
RegionLabel label_from_name(std::string_view name);    // throws on unknown

enum class VerdictKind {
  Exponential,
  Polynomial,
  Unknown,
  OutOfTheory,
  IllPosedFramework,
};

std::string_view kind_name(VerdictKind kind);

/// Predicted asymptotic behavior of the semigroup at one parameter point.
/// `order` is present iff kind == Polynomial and is then strictly positive.
struct StabilityVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  RegionLabel region = RegionLabel::Unclassified;
  std::optional<Rational> order;
};

}  // namespace cattaneo
