#pragma once

#include <cstdint>
#include <functional>

#include "ptof/geometry.hpp"

namespace ptof {

/// Result of a randomized closed-form vs. bisection comparison run.
struct OracleTrialReport {
  int trials = 0;
  double maxRelativeError = 0.0;
  BistaticGeometryd worstGeometry;
  Vec3d worstDirection = Vec3d::UnitZ();
  double worstTotalPath = 0.0;

  bool withinTolerance(double tol = 1e-9) const { return maxRelativeError < tol; }
};

using DepthFn = std::function<double(const BistaticGeometryd&, const UnitVec3d&,
                                     const BistaticRanged&)>;

/// Runs `trials` randomized non-degenerate geometries (total path at least
/// baseline * (1 + 1e-6), |2G - 2d| > 1e-6) and reports the maximum
/// relative deviation of `depthFn` from the bisection oracle.
OracleTrialReport runOracleTrials(int trials, std::uint64_t seed, const DepthFn& depthFn);

/// Same run against the library's own closed form.
OracleTrialReport runOracleTrials(int trials, std::uint64_t seed);

}  // namespace ptof
