#pragma once

#include <Eigen/Core>

#include "ptof/geometry.hpp"

namespace ptof {

/// Ideal pinhole intrinsics. No distortion model: the synthetic pipeline is
/// self-consistent without one, and the receiving lens is treated as
/// calibrated.
struct CameraIntrinsics {
  double focalLength = 0.025;    // meters
  double pixelPitch = 17.5e-6;   // meters per pixel
  int width = 352;               // pixels
  int height = 288;              // pixels
  Eigen::Vector2d principalPoint{176.0, 144.0};  // (u0, v0), pixels

  /// Throws ConfigError naming the offending field.
  void validate(const std::string& fieldPrefix = "camera") const;
};

/// Camera pose: optical center (coincides with the receiver position) and
/// a world-from-camera rotation.
struct CameraPose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Matrix3d orientation = Eigen::Matrix3d::Identity();

  /// Checks the rotation is orthonormal with determinant +1 (1e-10).
  void validate(const std::string& fieldPrefix = "camera") const;
};

/// World-frame unit observation direction through pixel (u, v). Fractional
/// coordinates are allowed; (u0, v0) maps to the optical axis.
UnitVec3d pixelDirection(const CameraIntrinsics& intrinsics, const CameraPose& pose,
                         double u, double v);

/// Per-pixel observation directions at pixel centers (u + 0.5, v + 0.5),
/// one column per pixel, index v * width + u.
class DirectionGrid {
 public:
  DirectionGrid(int width, int height) : width_(width), height_(height), dirs_(3, std::ptrdiff_t(width) * height) {}

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  Eigen::Vector3d at(int u, int v) const { return dirs_.col(index(u, v)); }
  UnitVec3d unitAt(int u, int v) const { return UnitVec3d(Vec3d(dirs_.col(index(u, v)))); }

  Eigen::Matrix3Xd& data() noexcept { return dirs_; }
  const Eigen::Matrix3Xd& data() const noexcept { return dirs_; }

  std::ptrdiff_t index(int u, int v) const noexcept {
    return std::ptrdiff_t(v) * width_ + u;
  }

 private:
  int width_;
  int height_;
  Eigen::Matrix3Xd dirs_;
};

DirectionGrid directionGrid(const CameraIntrinsics& intrinsics, const CameraPose& pose);

}  // namespace ptof
