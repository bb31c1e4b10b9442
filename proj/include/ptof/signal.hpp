#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "ptof/errors.hpp"
#include "ptof/geometry.hpp"

namespace ptof {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s, vacuum

enum class WaveformKind { SinusoidalFundamental, RectPulseTrain };

/// Parametric model of the per-pixel correlation waveform over delay.
///
/// SinusoidalFundamental:  A * cos(2*pi*f*(delay - shift)) + B
/// RectPulseTrain:         B + A * max(0, 1 - |wrap(delay - shift)| / pulseWidth)
/// with wrap mapping into (-T/2, T/2], T = 1/f. The shift is interpreted
/// modulo the period.
struct CorrelationModel {
  WaveformKind kind = WaveformKind::SinusoidalFundamental;
  double frequency = 1.0e7;  // Hz
  double amplitude = 1.0;
  double offset = 0.0;
  double shift = 0.0;        // seconds
  double pulseWidth = 0.0;   // seconds, RectPulseTrain only

  double period() const { return 1.0 / frequency; }
  void validate(const std::string& fieldPrefix = "signal") const;
};

/// Programmable delays at which correlation samples are acquired.
struct DelaySweep {
  std::vector<double> delays;  // seconds, strictly increasing, all >= 0

  /// count equally spaced delays: start, start + step, ...
  static DelaySweep uniform(int count, double step, double start = 0.0);

  std::size_t size() const noexcept { return delays.size(); }
  void validate(const std::string& fieldPrefix = "sweep") const;
};

/// Correlation samples aligned with a DelaySweep.
using SampleVector = Eigen::VectorXd;

enum class NoiseKind { None, AdditiveGaussian };

struct NoiseModel {
  NoiseKind kind = NoiseKind::None;
  double sigma = 0.0;       // sample units
  std::uint64_t seed = 0;

  void validate(const std::string& fieldPrefix = "noise") const;
};

/// System-delay calibration: residual electrical delay (cables, trigger)
/// and a distance mismatch, both subtracted during reconstruction.
struct CalibrationParams {
  double delayOffset = 0.0;     // seconds
  double distanceOffset = 0.0;  // meters
};

/// Evaluates the correlation model at one delay.
double correlationValue(const CorrelationModel& model, double delay);

/// Samples the model over a sweep; AdditiveGaussian noise is drawn from a
/// generator seeded with noise.seed, so output is a pure function of the
/// arguments.
SampleVector sampleSweep(const CorrelationModel& model, const DelaySweep& sweep,
                         const NoiseModel& noise);

/// Time of the first upward threshold crossing of a sampled waveform,
/// linearly interpolated between the bracketing samples. Models the
/// reference-retrieval trigger. Throws NoCrossing.
double thresholdTrigger(const SampleVector& waveform, const DelaySweep& times,
                        double threshold);

struct SinusoidFit {
  double shift;      // seconds, in [0, 1/f)
  double amplitude;  // >= 0
  double offset;
};

/// Linear least-squares fit of y = c1*cos(2*pi*f*t) + c2*sin(2*pi*f*t) + B,
/// factorized once per sweep so many sample vectors can be fitted cheaply.
class SinusoidShiftSolver {
 public:
  SinusoidShiftSolver(const DelaySweep& sweep, double frequency);

  SinusoidFit fit(const SampleVector& samples) const;

  double frequency() const noexcept { return frequency_; }

 private:
  double frequency_;
  std::size_t sampleCount_;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
};

/// One-shot convenience wrapper around SinusoidShiftSolver.
/// Throws RankDeficient when the sweep phases do not span three degrees of
/// freedom (fewer than 3 samples, or all delays at the same phase).
SinusoidFit estimateShiftLeastSquares(const SampleVector& samples, const DelaySweep& sweep,
                                      double frequency);

/// Grid search over candidate shifts spanning one period: returns the
/// candidate maximizing the inner product between the samples and the
/// zero-shift template evaluated at the shifted sweep delays. Ties resolve
/// to the smallest candidate.
double estimateShiftMatchedFilter(const SampleVector& samples, const DelaySweep& sweep,
                                  const CorrelationModel& zeroShiftTemplate,
                                  double gridStep);

/// Converts a measured shift to the total two-leg path length. The measured
/// shift encodes (d_ET + d_RT - d_ER) / c because synchronization is
/// referenced to the direct line-of-sight path, so the baseline is added
/// back before the ellipsoid correction.
BistaticRanged shiftToPath(double shift, const CalibrationParams& calib, double baseline);

}  // namespace ptof
