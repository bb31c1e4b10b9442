#pragma once

#include <filesystem>
#include <string>

#include "ptof/pipeline.hpp"

namespace ptof {

/// One experiment description: everything needed to simulate a frame and to
/// reconstruct it. Loaded from a JSON document; unknown keys are rejected
/// and all module-level invariants are checked at load time.
struct RunConfig {
  BistaticGeometryd geometry;
  CameraIntrinsics intrinsics;
  CameraPose pose;
  CorrelationModel model;  // base waveform, zero shift
  DelaySweep sweep;
  NoiseModel noise;
  Scene scene;
  bool radiometricFalloff = false;
  CalibrationParams calibration;
  EstimatorConfig estimator;

  SignalConfig signalConfig() const { return {model, calibration, radiometricFalloff}; }

  /// Cross-field and module invariants; throws ConfigError.
  void validate() const;
};

/// Parses and validates a JSON document. Throws ConfigError with the dotted
/// path of the offending field.
RunConfig parseRunConfig(const std::string& text);

RunConfig loadRunConfig(const std::filesystem::path& path);

/// Canonical serialization: alphabetical keys, sweep materialized as an
/// explicit delay list. serialize(parse(s)) is idempotent.
std::string serializeRunConfig(const RunConfig& config);

/// Desk-scale reference scenario: emitter 0.30 m and receiver 0.20 m from a
/// flat target with a 0.10 m baseline, 25 mm lens, four-sample sweep,
/// noiseless. Used by `bench` and as a documentation example.
RunConfig defaultScenario();

/// Same geometry with the stepped star target instead of the plane.
RunConfig starScenario();

}  // namespace ptof
