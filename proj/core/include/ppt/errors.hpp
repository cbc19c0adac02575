#ifndef PPT_ERRORS_HPP
#define PPT_ERRORS_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppt {

/// Malformed external input (files, strings, shapes). The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural guarantee failed at runtime. Signals either an invalid
/// perturbation or a geometry bug; the CLI maps it to exit code 1.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class GeneralPositionError : public InputError {
 public:
  GeneralPositionError(std::string what, std::array<std::size_t, 3> triple)
      : InputError(std::move(what)), triple_(triple) {}

  /// Offending indices; for coincident points the third entry repeats the second.
  const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

class InvalidPerturbation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

/// A strain vector is not the image of any motion.
class NotInImage : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace ppt

#endif  // PPT_ERRORS_HPP
