#pragma once

#include <cstddef>

namespace ptof {

/// Timing of a full-frame simulate + reconstruct on the reference scenario
/// (352x288, four delays per pixel, least-squares estimator).
struct BenchResult {
  int width = 0;
  int height = 0;
  std::size_t sweepLength = 0;
  double simulateSeconds = 0.0;
  double reconstructSeconds = 0.0;
  double rmse = 0.0;  // against ray-cast ground truth
  std::size_t comparedPixels = 0;

  double totalSeconds() const { return simulateSeconds + reconstructSeconds; }
};

BenchResult runBench();

}  // namespace ptof
