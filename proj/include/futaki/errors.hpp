#pragma once

#include <stdexcept>
#include <string>

namespace futaki {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error { using Error::Error; };
class PoleError : public Error { using Error::Error; };
class TruncationError : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

class InvalidBundle : public Error { using Error::Error; };
class InvalidDestabilizer : public Error { using Error::Error; };

/// The polarization parameter is not strictly above every slope.
class InadmissiblePolarization : public Error {
 public:
  InadmissiblePolarization(const std::string& what, std::string violated_slope)
      : Error(what), violated_slope_(std::move(violated_slope)) {}
  const std::string& violated_slope() const { return violated_slope_; }

 private:
  std::string violated_slope_;
};

class SingularSystem : public Error { using Error::Error; };
class InternalMismatch : public Error { using Error::Error; };
class IdentityMismatch : public Error { using Error::Error; };
class WrongArity : public Error { using Error::Error; };
class NotNormalized : public Error { using Error::Error; };
class DepthExceeded : public Error { using Error::Error; };

}  // namespace futaki
