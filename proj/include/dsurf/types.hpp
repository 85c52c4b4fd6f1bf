#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace dsurf {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

enum class ErrorCode {
  NonTrivalent,
  DegenerateVertex,
  BadRotation,
  ZeroNormal,
  DegenerateTriangle,
  AllPairsSkipped,
  SingularSystem,
  GaugeConflict,
  NotHarmonic,
  RankDeficient,
  HypothesisFailed,
  DegenerateChirality,
  NonClosed,
  NotParallel,
  ParseError,
  ValidationError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace dsurf
