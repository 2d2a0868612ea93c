#pragma once

#include <string>
#include <vector>

#include "cattaneo/types.hpp"

namespace cattaneo {

/// Eigenvalue sequence of the underlying spatial operator A.
struct SpectralSequence {
  enum class Kind { PowerLaw, Explicit };
  Kind kind = Kind::PowerLaw;
  double c = 1.0;  // mu_n = c * n^p for the power law
  double p = 4.0;
  std::vector<double> values;  // materialized, ascending, all > 0
};

/// mu_n = c n^p for n = 1..count. Throws on non-positive parameters.
SpectralSequence power_law_sequence(double c, double p, int count);

/// Sorted copy of an explicit positive list.
SpectralSequence explicit_sequence(std::vector<double> values);

/// Named configuration: a concrete coupled-PDE system reduced to its
/// abstract parameters, plus the spectral sequence of its spatial operator.
struct Preset {
  std::string name;
  std::string description;
  ParameterPoint point;
  SpectralSequence sequence;
  StabilityVerdict expected;
};

const std::vector<std::string>& preset_names();

/// Lookup by name (example1, example1-m0, example2, example2-m0, example3,
/// example3-m0). Throws std::domain_error for unknown names.
Preset preset(const std::string& name);

}  // namespace cattaneo
