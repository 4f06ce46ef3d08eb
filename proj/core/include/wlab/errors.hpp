#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace wlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input data fails a structural requirement (asymmetric tensor, bad config ...).
struct ValidationError : Error {
  using Error::Error;
};

// The truncated metric lost positive definiteness at a point.
struct MetricDegeneracyError : Error {
  Eigen::Vector3d point;
  MetricDegeneracyError(const std::string& msg, const Eigen::Vector3d& y)
      : Error(msg), point(y) {}
};

// det(first fundamental form) <= 0 somewhere on a chart.
struct ImmersionDegeneracyError : Error {
  int chart;
  int ix, iy;
  ImmersionDegeneracyError(const std::string& msg, int c, int i, int j)
      : Error(msg), chart(c), ix(i), iy(j) {}
};

struct NormalOrientationError : Error {
  using Error::Error;
};

struct GaugeError : Error {
  using Error::Error;
};

struct LineSearchError : Error {
  using Error::Error;
};

struct ConformalityError : Error {
  double defect = 0.0;
  double threshold = 0.0;
  ConformalityError(const std::string& msg, double d, double t)
      : Error(msg), defect(d), threshold(t) {}
};

}  // namespace wlab
