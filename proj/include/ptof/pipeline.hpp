#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "ptof/camera.hpp"
#include "ptof/scene.hpp"
#include "ptof/signal.hpp"

namespace ptof {

/// Everything the simulator needs to turn a two-leg path into samples: the
/// base waveform (zero shift), the system-delay calibration baked into the
/// measurement, and whether amplitude falls off with 1/d_RT^2.
struct SignalConfig {
  CorrelationModel model;
  CalibrationParams calibration;
  bool radiometricFalloff = false;
};

/// Acquisition description echoed into every frame so a frame file is
/// self-describing.
struct FrameMeta {
  BistaticGeometryd geometry;
  CameraIntrinsics intrinsics;
  CameraPose pose;
  CorrelationModel model;  // base model, zero shift
  CalibrationParams calibration;
  NoiseModel noise;
  bool radiometricFalloff = false;
};

/// Per-pixel correlation samples over a delay sweep; the simulated sensor
/// output. Sample columns are indexed v * width + u; invalid (miss) pixels
/// have an all-zero column and a cleared valid flag.
struct CorrelationFrame {
  int width = 0;
  int height = 0;
  DelaySweep sweep;
  Eigen::MatrixXd samples;  // sweep.size() rows x (width*height) columns
  std::vector<std::uint8_t> valid;
  FrameMeta meta;

  std::ptrdiff_t pixelIndex(int u, int v) const noexcept {
    return std::ptrdiff_t(v) * width + u;
  }
  bool pixelValid(int u, int v) const { return valid[pixelIndex(u, v)] != 0; }
};

/// Reconstructed metric depth (d_RT, meters); invalid pixels carry no value.
struct DepthMap {
  int width = 0;
  int height = 0;
  Eigen::ArrayXXd depth;  // height x width
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> valid;
};

/// Reconstructed correlation amplitude per pixel.
struct IntensityMap {
  int width = 0;
  int height = 0;
  Eigen::ArrayXXd amplitude;  // height x width, >= 0 where valid
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> valid;
};

enum class EstimatorKind { LeastSquares, MatchedFilter };

struct EstimatorConfig {
  EstimatorKind kind = EstimatorKind::LeastSquares;
  double gridStep = 1.0e-10;  // seconds, matched filter only

  void validate(const std::string& fieldPrefix = "estimator") const;
};

/// Forward direction: ray casts the scene and synthesizes the per-pixel
/// correlation samples a receiver-only camera would acquire. The per-pixel
/// shift is (d_ET + d_RT - d_ER)/c + calibration.delay_offset; noise is
/// seeded per pixel from noise.seed, so results are independent of
/// evaluation order.
CorrelationFrame simulateFrame(const Scene& scene, const BistaticGeometryd& geom,
                               const CameraIntrinsics& intrinsics, const CameraPose& pose,
                               const SignalConfig& signal, const NoiseModel& noise,
                               const DelaySweep& sweep);

struct ReconstructionResult {
  DepthMap depth;
  IntensityMap intensity;
};

/// Inverse direction: estimates the per-pixel time shift with the chosen
/// estimator, converts it to a total path, and intersects the resulting
/// ellipsoid with the pixel ray. Pixels whose estimation or geometry step
/// fails are marked invalid; the frame is never aborted. Throws
/// MetadataMismatch when geom/camera disagree with the frame metadata.
ReconstructionResult reconstruct(const CorrelationFrame& frame, const BistaticGeometryd& geom,
                                 const CameraIntrinsics& intrinsics, const CameraPose& pose,
                                 const CalibrationParams& calib, const EstimatorConfig& estimator);

struct RmseReport {
  double rmse = 0.0;        // meters
  std::size_t count = 0;    // jointly valid pixels compared
};

/// RMSE of reconstructed depth against ground-truth d_RT over pixels valid
/// in both. Throws NoOverlap when no pixel is valid in both.
RmseReport depthRmse(const DepthMap& depth, const PathGrid& truth);

/// Calibration helper: mean residual between estimated shifts and the
/// ground-truth shifts of a known target, i.e. the system delay offset that
/// makes the frame consistent with the truth.
double calibrateDelayOffset(const CorrelationFrame& frame, const PathGrid& truth,
                            const EstimatorConfig& estimator);

}  // namespace ptof
