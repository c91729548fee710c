#ifndef PATHDEA_ERRORS_HPP
#define PATHDEA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pathdea {

/// Base class of all exceptions thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Vector or matrix dimensions do not agree.
class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// An input or output component takes the same value for every DMU.
class ConstantComponent : public Error {
 public:
  ConstantComponent(bool input_side, std::size_t row)
      : Error(std::string(input_side ? "input" : "output") + " row " +
              std::to_string(row) + " is constant across all DMUs"),
        input_side_(input_side),
        row_(row) {}

  bool input_side() const { return input_side_; }
  std::size_t row() const { return row_; }

 private:
  bool input_side_;
  std::size_t row_;
};

/// A path-function kind was requested for a role it cannot serve.
class InvalidRole : public Error {
 public:
  explicit InvalidRole(const std::string& what) : Error(what) {}
};

/// Exponent outside the admissible range for the requested role.
class InvalidExponent : public Error {
 public:
  explicit InvalidExponent(const std::string& what) : Error(what) {}
};

/// Argument outside the domain of a path function.
class OutOfDomain : public Error {
 public:
  explicit OutOfDomain(const std::string& what) : Error(what) {}
};

/// Value outside the image of a path function (no preimage exists).
class OutOfImage : public Error {
 public:
  explicit OutOfImage(const std::string& what) : Error(what) {}
};

/// A direction pair came out identically zero.
class ZeroDirection : public Error {
 public:
  explicit ZeroDirection(const std::string& what) : Error(what) {}
};

/// A direction component is negative and absolute values were not requested.
class NegativeComponent : public Error {
 public:
  explicit NegativeComponent(const std::string& what) : Error(what) {}
};

/// Operation requires the linear pair (theta, 2 - theta).
class NotLinearModel : public Error {
 public:
  explicit NotLinearModel(const std::string& what) : Error(what) {}
};

/// The evaluated unit fails the technology membership test.
class UnitOutsideTechnology : public Error {
 public:
  explicit UnitOutsideTechnology(const std::string& what) : Error(what) {}
};

/// The evaluated unit is a member of the technology set (super-efficiency only).
class UnitInsideTechnology : public Error {
 public:
  explicit UnitInsideTechnology(const std::string& what) : Error(what) {}
};

/// Internal guard: the slack-maximisation stage was handed an infeasible point.
class InfeasibleSecondPhase : public Error {
 public:
  explicit InfeasibleSecondPhase(const std::string& what) : Error(what) {}
};

/// Homogeneity analysis requires strictly positive data.
class NonPositiveData : public Error {
 public:
  explicit NonPositiveData(const std::string& what) : Error(what) {}
};

/// Malformed configuration text (model, direction, or tolerance encoding).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace pathdea

#endif  // PATHDEA_ERRORS_HPP
