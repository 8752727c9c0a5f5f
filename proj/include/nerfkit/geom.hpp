// Copyright Contributors to the nerfkit Project
// SPDX-License-Identifier: Apache-2.0
//
// Geometry primitives shared by the whole toolkit. Conventions, used
// everywhere without further comment:
//   - right-handed world coordinates, scene units are meters;
//   - camera space looks down -z, +x right, +y up;
//   - pixel (0,0) is the top-left corner, i indexes columns, j rows;
//   - the stated field of view is horizontal, vertical follows from aspect.

#pragma once

#include <cmath>

#include "nerfkit/common.hpp"

namespace nerfkit {

// Scale + rotation + translation, x' = s R x + t.
template <class S>
struct Similarity {
  S scale = S(1);
  Mat3<S> rotation = Mat3<S>::Identity();
  Vec3<S> translation = Vec3<S>::Zero();

  static Similarity identity() { return Similarity{}; }

  Vec3<S> apply(const Vec3<S>& x) const {
    return scale * (rotation * x) + translation;
  }

  Similarity inverse() const {
    Similarity inv;
    inv.scale = S(1) / scale;
    inv.rotation = rotation.transpose();
    inv.translation = -(inv.rotation * translation) * inv.scale;
    return inv;
  }

  // Composition: (a * b).apply(x) == a.apply(b.apply(x)).
  friend Similarity operator*(const Similarity& a, const Similarity& b) {
    Similarity c;
    c.scale = a.scale * b.scale;
    c.rotation = a.rotation * b.rotation;
    c.translation = a.scale * (a.rotation * b.translation) + a.translation;
    return c;
  }

  template <class T>
  Similarity<T> cast() const {
    Similarity<T> out;
    out.scale = T(scale);
    out.rotation = rotation.template cast<T>();
    out.translation = translation.template cast<T>();
    return out;
  }
};

using Similarityd = Similarity<double>;

template <class S>
Vec3<S> similarity_apply(const Similarity<S>& t, const Vec3<S>& x) {
  return t.apply(x);
}

// Rodrigues' formula. axis need not be unit length; angle in radians.
template <class S>
Mat3<S> rotation_about_axis(const Vec3<S>& axis, S angle) {
  const Vec3<S> u = axis.normalized();
  const S c = std::cos(angle), s = std::sin(angle);
  Mat3<S> k;
  k << S(0), -u.z(), u.y(), u.z(), S(0), -u.x(), -u.y(), u.x(), S(0);
  return Mat3<S>::Identity() + s * k + (S(1) - c) * (k * k);
}

template <class S>
bool is_rotation(const Mat3<S>& r, S tol = S(1e-9)) {
  return (r.transpose() * r - Mat3<S>::Identity()).cwiseAbs().maxCoeff() <= tol &&
         r.determinant() > S(0);
}

template <class S>
struct Ray {
  Vec3<S> origin = Vec3<S>::Zero();
  Vec3<S> dir = Vec3<S>::UnitZ();  // unit length
};

using Rayd = Ray<double>;

template <class S>
struct Camera {
  Similarity<S> pose;  // camera-to-world, scale fixed at 1
  S fov_deg = S(60);   // horizontal field of view
  int width = 0;
  int height = 0;
  S near = S(0.01);
  S far = S(1);

  Vec3<S> eye() const { return pose.translation; }
  Vec3<S> forward() const { return pose.rotation * Vec3<S>(S(0), S(0), S(-1)); }
  Vec3<S> right() const { return pose.rotation * Vec3<S>(S(1), S(0), S(0)); }
  Vec3<S> up() const { return pose.rotation * Vec3<S>(S(0), S(1), S(0)); }

  void validate() const {
    if (!(fov_deg > S(0) && fov_deg < S(180)))
      throw ConfigError("camera fov_deg must lie in (0, 180)");
    if (!(near < far)) throw ConfigError("camera near must be < far");
    if (width <= 0 || height <= 0)
      throw ConfigError("camera resolution must be positive");
    if (!is_rotation(pose.rotation))
      throw ConfigError("camera pose rotation is not a proper rotation");
  }

  template <class T>
  Camera<T> cast() const {
    Camera<T> out;
    out.pose = pose.template cast<T>();
    out.fov_deg = T(fov_deg);
    out.width = width;
    out.height = height;
    out.near = T(near);
    out.far = T(far);
    return out;
  }
};

using Camerad = Camera<double>;

template <class S>
Camera<S> look_at_camera(const Vec3<S>& eye, const Vec3<S>& target,
                         const Vec3<S>& up, S fov_deg, int width, int height,
                         S near, S far) {
  const Vec3<S> f = target - eye;
  if (f.norm() == S(0)) throw DegenerateFrame("look_at: eye equals target");
  const Vec3<S> z_axis = -f.normalized();
  Vec3<S> x_axis = up.cross(z_axis);
  if (x_axis.norm() <= S(1e-9) * up.norm())
    throw DegenerateFrame("look_at: up is parallel to the view direction");
  x_axis.normalize();
  const Vec3<S> y_axis = z_axis.cross(x_axis);

  Camera<S> cam;
  cam.pose.rotation.col(0) = x_axis;
  cam.pose.rotation.col(1) = y_axis;
  cam.pose.rotation.col(2) = z_axis;
  cam.pose.translation = eye;
  cam.fov_deg = fov_deg;
  cam.width = width;
  cam.height = height;
  cam.near = near;
  cam.far = far;
  cam.validate();
  return cam;
}

template <class S>
S deg_to_rad(S deg) {
  return deg * S(M_PI / 180.0);
}

// Ray through pixel (i, j) offset by jitter in [0,1)^2; (0.5, 0.5) is the
// pixel center. The image plane sits at unit distance with half-width
// tan(fov/2) and half-height scaled by the aspect ratio.
template <class S>
Ray<S> ray_for_pixel(const Camera<S>& cam, int i, int j, S jitter_x = S(0.5),
                     S jitter_y = S(0.5)) {
  if (i < 0 || i >= cam.width || j < 0 || j >= cam.height)
    throw OutOfBounds("ray_for_pixel: pixel outside image");
  const S tan_half = std::tan(deg_to_rad(cam.fov_deg) / S(2));
  const S aspect = S(cam.height) / S(cam.width);
  const S u = ((S(i) + jitter_x) / S(cam.width) * S(2) - S(1)) * tan_half;
  const S v = (S(1) - (S(j) + jitter_y) / S(cam.height) * S(2)) * tan_half * aspect;
  Vec3<S> dir_cam(u, v, S(-1));
  Ray<S> ray;
  ray.origin = cam.eye();
  ray.dir = (cam.pose.rotation * dir_cam).normalized();
  return ray;
}

}  // namespace nerfkit
