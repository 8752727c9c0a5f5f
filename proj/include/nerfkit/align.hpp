// Copyright Contributors to the nerfkit Project
// SPDX-License-Identifier: Apache-2.0
//
// Canonical-face-space machinery: mean geometry over subjects and the
// closed-form similarity fit (Umeyama) between corresponded keypoint sets.

#pragma once

#include <Eigen/SVD>

#include <string>
#include <vector>

#include "nerfkit/common.hpp"
#include "nerfkit/geom.hpp"

namespace nerfkit {

// Ordered, labeled 3D keypoints for one subject. Label order must match
// across every set that participates in a fit or a mean.
struct KeypointSet {
  std::string subject_id;
  std::vector<std::string> labels;
  std::vector<Vec3d> points;

  std::size_t size() const { return points.size(); }
};

inline void check_same_labels(const KeypointSet& a, const KeypointSet& b) {
  if (a.labels != b.labels || a.points.size() != b.points.size())
    throw MismatchedLabels("keypoint sets disagree in labels or size");
}

// Per-label arithmetic mean of coordinates across subjects.
inline KeypointSet mean_geometry(const std::vector<KeypointSet>& sets) {
  if (sets.empty()) throw MismatchedLabels("mean_geometry: no keypoint sets");
  KeypointSet mean;
  mean.subject_id = "mean";
  mean.labels = sets.front().labels;
  mean.points.assign(sets.front().points.size(), Vec3d::Zero());
  for (const auto& set : sets) {
    check_same_labels(sets.front(), set);
    for (std::size_t i = 0; i < set.points.size(); ++i)
      mean.points[i] += set.points[i];
  }
  for (auto& p : mean.points) p /= double(sets.size());
  return mean;
}

// Closed-form least-squares similarity (s, R, t) minimizing
// sum_i | s R src_i + t - dst_i |^2, with a single isotropic scale and the
// reflection corrected to a proper rotation via the sign of the determinant.
inline Similarityd fit_similarity(const KeypointSet& src, const KeypointSet& dst) {
  check_same_labels(src, dst);
  const std::size_t n = src.size();
  if (n < 3)
    throw DegenerateConfiguration("fit_similarity: need at least 3 points");

  Vec3d mu_src = Vec3d::Zero(), mu_dst = Vec3d::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    mu_src += src.points[i];
    mu_dst += dst.points[i];
  }
  mu_src /= double(n);
  mu_dst /= double(n);

  Mat3d cov = Mat3d::Zero();  // dst-src cross-covariance
  double src_var = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3d ds = src.points[i] - mu_src;
    const Vec3d dd = dst.points[i] - mu_dst;
    cov += dd * ds.transpose();
    src_var += ds.squaredNorm();
  }
  cov /= double(n);
  src_var /= double(n);

  Eigen::JacobiSVD<Mat3d> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec3d sv = svd.singularValues();

  // Collinear (or coincident) source points leave the fit underdetermined:
  // the source scatter has rank < 2 and so does the cross-covariance.
  Mat3d src_scatter = Mat3d::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3d ds = src.points[i] - mu_src;
    src_scatter += ds * ds.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Mat3d> eig(src_scatter);
  const Vec3d ev = eig.eigenvalues();  // ascending
  if (!(ev(1) > 1e-12 * std::max(ev(2), 1e-300)))
    throw DegenerateConfiguration("fit_similarity: source points are collinear");

  Vec3d sign_fix(1.0, 1.0, 1.0);
  if (svd.matrixU().determinant() * svd.matrixV().determinant() < 0.0)
    sign_fix(2) = -1.0;  // flip the smallest singular direction

  Similarityd out;
  out.rotation = svd.matrixU() * sign_fix.asDiagonal() * svd.matrixV().transpose();
  out.scale = sv.dot(sign_fix) / src_var;
  if (!(out.scale > 0.0))
    throw DegenerateConfiguration("fit_similarity: non-positive scale");
  out.translation = mu_dst - out.scale * (out.rotation * mu_src);
  return out;
}

// Warp from a subject's world coordinates into the shared canonical space;
// applied to sample points before field evaluation (directions stay in
// world coordinates).
inline Similarityd canonical_warp_for_subject(const KeypointSet& subject_keypoints,
                                              const KeypointSet& mean) {
  return fit_similarity(subject_keypoints, mean);
}

inline double fit_residual_rms(const KeypointSet& src, const KeypointSet& dst,
                               const Similarityd& t) {
  check_same_labels(src, dst);
  double acc = 0.0;
  for (std::size_t i = 0; i < src.size(); ++i)
    acc += (t.apply(src.points[i]) - dst.points[i]).squaredNorm();
  return std::sqrt(acc / double(src.size()));
}

}  // namespace nerfkit
