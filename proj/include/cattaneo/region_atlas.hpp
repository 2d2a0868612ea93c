#pragma once

#include <span>
#include <vector>

#include "cattaneo/types.hpp"

namespace cattaneo {

/// Labels of the inertial atlas in definition order (14 subregions).
std::span<const RegionLabel> inertial_labels();
/// Labels of the non-inertial atlas in definition order (9 subregions).
std::span<const RegionLabel> noninertial_labels();

/// Every atlas label whose membership predicate holds at (alpha,beta,gamma).
/// The predicates are pairwise disjoint, so the result has at most one entry;
/// it is exposed separately so that disjointness is testable directly.
std::vector<RegionLabel> matching_inertial_labels(double alpha, double beta,
                                                  double gamma, double eps = 0.0);
std::vector<RegionLabel> matching_noninertial_labels(double alpha, double beta,
                                                     double eps = 0.0);

/// Unique subregion of the inertial atlas containing the point, or
/// Unclassified. Comparisons are exact for eps == 0; a positive eps snaps
/// values within eps of a boundary onto it. Throws std::domain_error outside
/// [0,1] x [0,1] x (0,1].
RegionLabel classify_inertial(double alpha, double beta, double gamma,
                              double eps = 0.0);

/// Same for the non-inertial atlas on [0,1]^2.
RegionLabel classify_noninertial(double alpha, double beta, double eps = 0.0);

/// Atlas lookup dispatching on point.inertial().
RegionLabel classify(const ParameterPoint& point, double eps = 0.0);

/// Generator condition for a contraction semigroup with 0 in the resolvent
/// set: beta >= 2 alpha - 1.
bool wellposed(const ParameterPoint& point);

/// Region label plus the predicted decay behavior, with the polynomial order
/// as an exact rational where one is proved.
StabilityVerdict decay_order(const ParameterPoint& point, double eps = 0.0);

/// Deterministic in-region representative: per-coordinate interval midpoints
/// resolved in a fixed order and rounded half-to-even on the 1/8 grid
/// (equality-constrained coordinates take their exact value).
ParameterPoint representative_point(RegionLabel label);

struct AtlasRow {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;  // NaN when the non-inertial atlas was sampled
  StabilityVerdict verdict;
};

/// Labeled grid over the parameter square/cube. alpha and beta take
/// `resolution` evenly spaced values covering [0,1]. With m_positive and no
/// gamma given, gamma sweeps k/resolution for k = 1..resolution (covering
/// (0,1] without 0). Requires resolution >= 2.
std::vector<AtlasRow> sample_atlas(int resolution, bool m_positive,
                                   double gamma = -1.0, double eps = 0.0);

}  // namespace cattaneo
