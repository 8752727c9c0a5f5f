// Copyright Contributors to the nerfkit Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace nerfkit {

template <class S> using Vec3 = Eigen::Matrix<S, 3, 1>;
template <class S> using Mat3 = Eigen::Matrix<S, 3, 3>;
template <class S> using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
// Row-major so a row is one point/sample; batches iterate over rows.
template <class S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Vec3d = Vec3<double>;
using Mat3d = Mat3<double>;

// Base for all nerfkit exceptions; CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// User/config-level failures (exit code 1).
struct ConfigError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct VersionMismatch : Error {
  using Error::Error;
};
struct ChecksumMismatch : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct MismatchedLabels : Error {
  using Error::Error;
};
struct TooSmall : Error {
  using Error::Error;
};
struct DegenerateFrame : Error {
  using Error::Error;
};
struct DegenerateConfiguration : Error {
  using Error::Error;
};
struct OutOfBounds : Error {
  using Error::Error;
};
struct NonMonotonicDepths : Error {
  using Error::Error;
};

// Internal numeric failures (exit code 2).
struct NonFiniteError : Error {
  using Error::Error;
};

}  // namespace nerfkit
