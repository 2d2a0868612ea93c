#pragma once

#include <functional>

namespace cattaneo {

/// Worker cap: min(hardware threads, CATTANEO_THREADS when set). At least 1.
int max_threads();

/// Index-parallel loop over [0, n); results must be written to disjoint,
/// index-addressed slots so the outcome is schedule independent.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace cattaneo
