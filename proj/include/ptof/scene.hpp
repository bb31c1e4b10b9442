#pragma once

#include <Eigen/Core>

#include <optional>
#include <variant>
#include <vector>

#include "ptof/camera.hpp"
#include "ptof/geometry.hpp"

namespace ptof {

/// Infinite plane through `point` with unit normal.
struct Plane {
  Eigen::Vector3d point;
  UnitVec3d normal;
  double reflectivity = 1.0;  // (0, 1]
};

/// Two-level stepped star target: a disc of radius outerRadius in the plane
/// through `center`, split into spokeCount equal angular sectors.
/// Even-index sectors (the spokes) sit on a plane offset by depthStep along
/// the normal, i.e. toward a camera the normal faces; odd sectors lie on the
/// base plane.
struct BoehlerStar {
  Eigen::Vector3d center;
  UnitVec3d normal;
  double outerRadius = 0.05;     // meters
  int spokeCount = 8;            // even, >= 2
  double depthStep = 0.01;       // meters
  double reflectivityFg = 1.0;   // spokes
  double reflectivityBg = 0.6;   // base plane
};

using Primitive = std::variant<Plane, BoehlerStar>;

struct Scene {
  std::vector<Primitive> primitives;

  void validate(const std::string& fieldPrefix = "scene") const;
};

/// Successful ray intersection: distance along the ray (> 0) and surface
/// reflectivity at the hit point.
struct Hit {
  double distance;
  double reflectivity;
};

/// Nearest positive-distance intersection across all primitives, or
/// std::nullopt on a miss.
std::optional<Hit> rayCast(const Scene& scene, const Eigen::Vector3d& origin,
                           const UnitVec3d& direction);

/// Per-pixel ground-truth two-leg geometry obtained by ray casting from the
/// receiver along every pixel direction. Arrays are height x width, indexed
/// (v, u); entries of invalid (miss) pixels are set to -1.
struct PathGrid {
  int width = 0;
  int height = 0;
  Eigen::ArrayXXd emitterPath;   // d_ET, meters
  Eigen::ArrayXXd receiverPath;  // d_RT, meters
  Eigen::ArrayXXd reflectivity;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> valid;
};

PathGrid groundTruthPaths(const Scene& scene, const BistaticGeometryd& geom,
                          const CameraIntrinsics& intrinsics, const CameraPose& pose);

}  // namespace ptof
