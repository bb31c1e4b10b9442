#pragma once

#include <Eigen/Core>

#include <cmath>

#include "ptof/errors.hpp"

namespace ptof {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

using Vec3d = Vec3<double>;

/// Direction vector with unit Euclidean norm (checked to 1e-12 on
/// construction). Converts implicitly to the underlying Eigen vector.
template <typename Scalar>
class UnitVec3 {
 public:
  explicit UnitVec3(const Vec3<Scalar>& v) : v_(v) {
    if (!v.allFinite() || std::abs(v.norm() - Scalar(1)) > Scalar(1e-12))
      throw Error("UnitVec3: norm deviates from 1 by more than 1e-12");
  }

  /// Normalizes an arbitrary nonzero vector.
  static UnitVec3 fromVector(const Vec3<Scalar>& v) {
    const Scalar n = v.norm();
    if (!v.allFinite() || !(n > Scalar(0)))
      throw Error("UnitVec3: cannot normalize a zero or non-finite vector");
    return UnitVec3(Vec3<Scalar>(v / n), Unchecked{});
  }

  const Vec3<Scalar>& vec() const noexcept { return v_; }
  operator const Vec3<Scalar>&() const noexcept { return v_; }

 private:
  struct Unchecked {};
  UnitVec3(const Vec3<Scalar>& v, Unchecked) : v_(v) {}

  Vec3<Scalar> v_;
};

using UnitVec3d = UnitVec3<double>;

/// Euclidean distance between emitter and receiver positions.
template <typename Scalar>
Scalar baselineDistance(const Vec3<Scalar>& emitter, const Vec3<Scalar>& receiver) {
  return (emitter - receiver).norm();
}

/// Emitter/receiver pair of a bistatic configuration. The two positions are
/// the foci of the range ellipsoid; the baseline is always derived, never
/// stored, so it cannot go stale.
template <typename Scalar>
struct BistaticGeometry {
  Vec3<Scalar> emitter;
  Vec3<Scalar> receiver;

  Scalar baseline() const { return baselineDistance<Scalar>(emitter, receiver); }
};

using BistaticGeometryd = BistaticGeometry<double>;

/// Total two-leg path length: emitter-to-target plus receiver-to-target,
/// in meters. A fixed total path constrains the target to an ellipsoid
/// with the emitter and receiver as foci.
template <typename Scalar>
struct BistaticRange {
  Scalar totalPath;
};

using BistaticRanged = BistaticRange<double>;

/// Forward model: total path length for a target point.
template <typename Scalar>
BistaticRange<Scalar> bistaticTotalPath(const BistaticGeometry<Scalar>& geom,
                                        const Vec3<Scalar>& target) {
  return {(geom.emitter - target).norm() + (geom.receiver - target).norm()};
}

/// Degeneracy thresholds for correctDepth, both in meters.
template <typename Scalar>
struct DepthTolerances {
  Scalar triangle = Scalar(1e-12);     // required margin of total path over baseline
  Scalar denominator = Scalar(1e-12);  // floor on |2G - 2d|
};

/// Closed-form ellipsoid-ray intersection.
///
/// Solves for the receiver-to-target distance t along the observation
/// direction n such that R + t*n lies on the ellipsoid with foci E, R and
/// total path d:
///
///     t = (b^2 - d^2) / (2G - 2d),   G = <E - R, n>,   b = baseline.
///
/// Throws RangeBelowBaseline when d does not exceed the baseline (no
/// ellipsoid exists), DegenerateDenominator when the ray is asymptotically
/// parallel to the ellipsoid, NonPhysicalDepth when the solution is not in
/// front of the receiver.
template <typename Scalar>
Scalar correctDepth(const BistaticGeometry<Scalar>& geom, const UnitVec3<Scalar>& direction,
                    const BistaticRange<Scalar>& range,
                    const DepthTolerances<Scalar>& tol = {}) {
  const Scalar d = range.totalPath;
  const Scalar baseline = geom.baseline();
  if (!(d > baseline + tol.triangle))
    throw RangeBelowBaseline("total path does not exceed the baseline");
  const Scalar g = (geom.emitter - geom.receiver).dot(direction.vec());
  const Scalar denom = Scalar(2) * g - Scalar(2) * d;
  if (std::abs(denom) <= tol.denominator)
    throw DegenerateDenominator("ray asymptotically parallel to the ellipsoid");
  const Scalar depth = (baseline * baseline - d * d) / denom;
  if (!(depth > Scalar(0)))
    throw NonPhysicalDepth("solution lies behind the receiver");
  return depth;
}

/// Target position from a receiver-to-target distance along a pixel ray.
template <typename Scalar>
Vec3<Scalar> targetFromDepth(const Vec3<Scalar>& receiver, const UnitVec3<Scalar>& direction,
                             Scalar depth) {
  if (!(depth > Scalar(0))) throw NonPositiveDepth("depth must be positive");
  return receiver + depth * direction.vec();
}

struct BisectionOptions {
  int maxIterations = 200;
  double widthTolerance = 1e-12;  // meters
};

/// Independent numeric check of correctDepth: bisection on
/// f(t) = |E - (R + t*n)| + t - d over t in (0, d]. f is nondecreasing in
/// t, so the root is unique when the bracket is valid.
template <typename Scalar>
Scalar oracleDepthBisection(const BistaticGeometry<Scalar>& geom,
                            const UnitVec3<Scalar>& direction,
                            const BistaticRange<Scalar>& range,
                            const BisectionOptions& opt = {}) {
  const Scalar d = range.totalPath;
  const auto f = [&](Scalar t) {
    return (geom.emitter - (geom.receiver + t * direction.vec())).norm() + t - d;
  };
  Scalar lo = Scalar(0);
  Scalar hi = d;
  if (!(f(lo) < Scalar(0)) || f(hi) < Scalar(0))
    throw NoIntersection("no root of the range equation in (0, d]");
  for (int i = 0; i < opt.maxIterations && hi - lo > Scalar(opt.widthTolerance); ++i) {
    const Scalar mid = (lo + hi) / Scalar(2);
    (f(mid) < Scalar(0) ? lo : hi) = mid;
  }
  return (lo + hi) / Scalar(2);
}

}  // namespace ptof
