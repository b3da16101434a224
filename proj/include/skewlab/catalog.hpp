#pragma once

// The shipped parameter matrix exercised by `skewlab verify` and the
// acceptance suite.

#include <string>
#include <vector>

#include "skewlab/mechanisms.hpp"

namespace skewlab {

struct Instance {
  std::string id;
  MechanismPtr mechanism;
};

/// Azzalini alpha in {0.5, 1, 3}; order statistics (2,2), (1.5,3), (5,1.2);
/// Marshall-Olkin gamma in {0.25, 0.5, 2, 4}; epsilon-skew two-piece
/// gamma in {-0.5, 0.3}.
std::vector<Instance> shipped_instances();

/// Epsilon-skew parameters for the two-piece chain check (reflected copies
/// with +gamma are added by the callers that want them).
inline constexpr double kChainGammas[] = {-0.9, -0.5, -0.1, -1e-6};

}  // namespace skewlab
