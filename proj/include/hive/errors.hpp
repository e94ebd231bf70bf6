#pragma once

#include <stdexcept>
#include <string>

namespace hive {

/** Base class for all errors raised by this library. */
class HiveError : public std::runtime_error {
 public:
  explicit HiveError(const std::string& what) : std::runtime_error(what) {}
};

class LengthMismatch : public HiveError {
 public:
  using HiveError::HiveError;
};

class NotWeaklyDecreasing : public HiveError {
 public:
  using HiveError::HiveError;
};

class SaturationViolated : public HiveError {
 public:
  using HiveError::HiveError;
};

class IncompleteHive : public HiveError {
 public:
  using HiveError::HiveError;
};

class InvalidSpec : public HiveError {
 public:
  using HiveError::HiveError;
};

class NotSymmetric : public HiveError {
 public:
  using HiveError::HiveError;
};

class EigenFailure : public HiveError {
 public:
  using HiveError::HiveError;
};

class IllConditionedJointMatrix : public HiveError {
 public:
  using HiveError::HiveError;
};

/** Exhaustive enumeration hit its node budget; carries the count found so far. */
class CapExceeded : public HiveError {
 public:
  CapExceeded(const std::string& what, long long partial)
      : HiveError(what), partial_count(partial) {}
  long long partial_count;
};

class InfeasibleLP : public HiveError {
 public:
  using HiveError::HiveError;
};

class NonIntegralOptimum : public HiveError {
 public:
  using HiveError::HiveError;
};

class InfeasiblePoint : public HiveError {
 public:
  using HiveError::HiveError;
};

class StartNotInterior : public HiveError {
 public:
  using HiveError::HiveError;
};

class UnboundedPolytope : public HiveError {
 public:
  using HiveError::HiveError;
};

class EmptyPolytope : public HiveError {
 public:
  using HiveError::HiveError;
};

class MixedSizes : public HiveError {
 public:
  using HiveError::HiveError;
};

class EmptyList : public HiveError {
 public:
  using HiveError::HiveError;
};

class DegenerateTriangle : public HiveError {
 public:
  using HiveError::HiveError;
};

}  // namespace hive
