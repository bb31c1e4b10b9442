#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ptof {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// geometry
struct RangeBelowBaseline : Error { using Error::Error; };
struct DegenerateDenominator : Error { using Error::Error; };
struct NonPhysicalDepth : Error { using Error::Error; };
struct NonPositiveDepth : Error { using Error::Error; };
struct NoIntersection : Error { using Error::Error; };

// camera
struct PixelOutOfBounds : Error { using Error::Error; };

// signal
struct NoCrossing : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct EmptySweep : Error { using Error::Error; };
struct NonPositivePath : Error { using Error::Error; };

// pipeline
struct NoOverlap : Error { using Error::Error; };
struct MetadataMismatch : Error { using Error::Error; };

/// Configuration validation failure. Carries the dotted path of the
/// offending field, e.g. "noise.sigma" or "scene.primitives[1].normal".
class ConfigError : public Error {
 public:
  ConfigError(std::string fieldPath, const std::string& what)
      : Error(fieldPath + ": " + what), fieldPath_(std::move(fieldPath)) {}

  const std::string& fieldPath() const noexcept { return fieldPath_; }

 private:
  std::string fieldPath_;
};

/// File read/write/parse failure. Parse errors carry a 1-based line number.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
  IoError(const std::string& what, long line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  long line() const noexcept { return line_; }

 private:
  long line_ = -1;
};

}  // namespace ptof
