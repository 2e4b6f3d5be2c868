// Copyright 2026 The mvbb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MVBB_GEOM_CORE_HPP
#define MVBB_GEOM_CORE_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

namespace mvbb {

/// Points are stored column-wise; one column per point.
template <typename Scalar>
using Points3 = Eigen::Matrix<Scalar, 3, Eigen::Dynamic>;
template <typename Scalar>
using Points2 = Eigen::Matrix<Scalar, 2, Eigen::Dynamic>;

using Vector2d = Eigen::Vector2d;
using Vector3d = Eigen::Vector3d;
using PointSet = Points3<double>;
using PointSet2 = Points2<double>;
using Index = Eigen::Index;

/// Thrown for inputs that have no meaningful geometric answer
/// (zero-length directions, empty point sets).
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Three mutually orthonormal, right-handed axes stored as matrix columns.
template <typename Scalar>
class Frame {
 public:
  using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;
  using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

  Frame() : axes_(Matrix3::Identity()) {}

  /// Builds a frame from the first two axes; the third is their cross product.
  /// Both inputs are normalized and the second is re-orthogonalized against
  /// the first.
  static Frame FromTwoAxes(const Vector3& b1, const Vector3& b2) {
    const Scalar n1 = b1.norm();
    if (!(n1 > Scalar(0))) throw GeometryError("degenerate direction");
    Vector3 u = b1 / n1;
    Vector3 v = b2 - u * u.dot(b2);
    const Scalar n2 = v.norm();
    if (!(n2 > Scalar(0))) throw GeometryError("degenerate direction");
    v /= n2;
    Frame f;
    f.axes_.col(0) = u;
    f.axes_.col(1) = v;
    f.axes_.col(2) = u.cross(v);
    return f;
  }

  static Frame Identity() { return Frame(); }

  const Matrix3& axes() const { return axes_; }
  Vector3 axis(int i) const { return axes_.col(i); }

  /// Largest deviation of the Gram matrix from identity.
  Scalar OrthonormalityError() const {
    return (axes_.transpose() * axes_ - Matrix3::Identity())
        .cwiseAbs()
        .maxCoeff();
  }
  Scalar Determinant() const { return axes_.determinant(); }

 private:
  Matrix3 axes_;
};

/// A box given by orientation, center and half side lengths along each axis.
template <typename Scalar>
struct OrientedBox {
  using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

  Frame<Scalar> frame;
  Vector3 center = Vector3::Zero();
  Vector3 half_extents = Vector3::Zero();

  Scalar Volume() const {
    return Scalar(8) * half_extents.x() * half_extents.y() *
           half_extents.z();
  }

  /// Coordinates of p in the box's local frame, relative to the center.
  Vector3 Local(const Vector3& p) const {
    return frame.axes().transpose() * (p - center);
  }

  bool Contains(const Vector3& p, Scalar tol) const {
    return ((Local(p).cwiseAbs() - half_extents).array() <= tol).all();
  }

  /// The 8 corners; bit i of the column index selects the sign on axis i.
  Points3<Scalar> Corners() const {
    Points3<Scalar> out(3, 8);
    for (int c = 0; c < 8; ++c) {
      Vector3 s(c & 1 ? 1 : -1, c & 2 ? 1 : -1, c & 4 ? 1 : -1);
      out.col(c) = center + frame.axes() * s.cwiseProduct(half_extents);
    }
    return out;
  }
};

/// Oriented rectangle in a plane; u and v are orthonormal.
template <typename Scalar>
struct Rect2 {
  using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

  Vector2 u = Vector2::UnitX();
  Vector2 v = Vector2::UnitY();
  Vector2 center = Vector2::Zero();
  Vector2 half_extents = Vector2::Zero();

  Scalar Area() const {
    return Scalar(4) * half_extents.x() * half_extents.y();
  }

  bool Contains(const Vector2& p, Scalar tol) const {
    const Vector2 d = p - center;
    return std::abs(d.dot(u)) <= half_extents.x() + tol &&
           std::abs(d.dot(v)) <= half_extents.y() + tol;
  }
};

using Frame3d = Frame<double>;
using OrientedBoxd = OrientedBox<double>;
using Rect2d = Rect2<double>;

/// Two unit vectors completing v (normalized internally) to a right-handed
/// orthonormal frame {v, w1, w2}. The canonical axis least aligned with v
/// (lowest index on ties) is orthogonalized against v to give w1, and
/// w2 = v x w1.
template <typename Derived>
std::pair<Eigen::Matrix<typename Derived::Scalar, 3, 1>,
          Eigen::Matrix<typename Derived::Scalar, 3, 1>>
OrthonormalComplement(const Eigen::MatrixBase<Derived>& direction) {
  using Scalar = typename Derived::Scalar;
  using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
  const Scalar len = direction.norm();
  if (!(len > Scalar(0)) || !std::isfinite(len)) {
    throw GeometryError("degenerate direction");
  }
  const Vector3 v = direction / len;
  int axis = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(v[i]) < std::abs(v[axis])) axis = i;
  }
  Vector3 w1 = Vector3::Unit(axis) - v * v[axis];
  w1.normalize();
  Vector3 w2 = v.cross(w1);
  return {w1, w2};
}

template <typename Derived>
Frame<typename Derived::Scalar> FrameAlong(
    const Eigen::MatrixBase<Derived>& direction) {
  auto [w1, w2] = OrthonormalComplement(direction);
  return Frame<typename Derived::Scalar>::FromTwoAxes(direction, w1);
}

/// Orthogonal projection onto the plane normal to `direction`, expressed in
/// the (w1, w2) basis from OrthonormalComplement.
template <typename Derived, typename DirDerived>
Points2<typename Derived::Scalar> ProjectToPlane(
    const Eigen::MatrixBase<Derived>& points,
    const Eigen::MatrixBase<DirDerived>& direction) {
  using Scalar = typename Derived::Scalar;
  auto [w1, w2] = OrthonormalComplement(direction);
  Eigen::Matrix<Scalar, 2, 3> basis;
  basis.row(0) = w1.transpose();
  basis.row(1) = w2.transpose();
  return basis * points;
}

/// Smallest box with the given orientation that contains every point.
template <typename Derived>
OrientedBox<typename Derived::Scalar> ShrinkToFit(
    const Eigen::MatrixBase<Derived>& points,
    const Frame<typename Derived::Scalar>& frame) {
  using Scalar = typename Derived::Scalar;
  using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
  if (points.cols() == 0) throw GeometryError("empty point set");
  const Points3<Scalar> local = frame.axes().transpose() * points;
  const Vector3 lo = local.rowwise().minCoeff();
  const Vector3 hi = local.rowwise().maxCoeff();
  OrientedBox<Scalar> box;
  box.frame = frame;
  box.center = frame.axes() * ((lo + hi) / Scalar(2));
  box.half_extents = (hi - lo) / Scalar(2);
  return box;
}

/// Length of the axis-aligned bounding box diagonal; the scale used for
/// relative containment tolerances.
template <typename Derived>
typename Derived::Scalar AabbDiagonal(
    const Eigen::MatrixBase<Derived>& points) {
  if (points.cols() == 0) return 0;
  return (points.rowwise().maxCoeff() - points.rowwise().minCoeff()).norm();
}

/// Containment with tolerance rel_tol * AABB diagonal of the points.
template <typename Derived>
bool BoxContainsAll(const OrientedBox<typename Derived::Scalar>& box,
                    const Eigen::MatrixBase<Derived>& points,
                    typename Derived::Scalar rel_tol = 1e-9) {
  const auto tol = rel_tol * AabbDiagonal(points);
  for (Index i = 0; i < points.cols(); ++i) {
    if (!box.Contains(points.col(i), tol)) return false;
  }
  return true;
}

/// Rejects NaN/Inf coordinates.
template <typename Derived>
bool AllFinite(const Eigen::MatrixBase<Derived>& points) {
  return points.allFinite();
}

}  // namespace mvbb

#endif  // MVBB_GEOM_CORE_HPP
