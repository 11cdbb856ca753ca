#pragma once

#include <stdexcept>
#include <string>

namespace ecdkit {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad shapes, sizes, files, parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine could not produce a trustworthy result.
class NumericError : public Error {
 public:
  using Error::Error;
};

#define ECDKIT_DEFINE_ERROR(Name, Base) \
  class Name : public Base {            \
   public:                              \
    using Base::Base;                   \
  }

ECDKIT_DEFINE_ERROR(DimensionMismatch, InputError);
ECDKIT_DEFINE_ERROR(NonFiniteInput, InputError);
ECDKIT_DEFINE_ERROR(NonSquareError, InputError);
ECDKIT_DEFINE_ERROR(AsymmetryError, InputError);
ECDKIT_DEFINE_ERROR(NonzeroDiagonalError, InputError);
ECDKIT_DEFINE_ERROR(NegativeDistanceError, InputError);
ECDKIT_DEFINE_ERROR(SizeMismatch, InputError);
ECDKIT_DEFINE_ERROR(InvalidK, InputError);
ECDKIT_DEFINE_ERROR(TooFewPoints, InputError);
ECDKIT_DEFINE_ERROR(InvalidTrials, InputError);
ECDKIT_DEFINE_ERROR(GeneratedSetTooSmall, InputError);
ECDKIT_DEFINE_ERROR(EmptySet, InputError);
ECDKIT_DEFINE_ERROR(TooFewSamples, InputError);
ECDKIT_DEFINE_ERROR(InvalidSpec, InputError);
ECDKIT_DEFINE_ERROR(ParseError, InputError);
ECDKIT_DEFINE_ERROR(SchemaError, InputError);

ECDKIT_DEFINE_ERROR(NoConvergence, NumericError);
ECDKIT_DEFINE_ERROR(NotPSD, NumericError);

#undef ECDKIT_DEFINE_ERROR

/// The pooled graph has no spanning tree once earlier layers are removed.
/// `layer` is 1-based; 0 means a plain MST call.
class DisconnectedError : public InputError {
 public:
  DisconnectedError(const std::string& what, int layer)
      : InputError(what), layer_(layer) {}
  int layer() const noexcept { return layer_; }

 private:
  int layer_;
};

class SingularCovariance : public NumericError {
 public:
  SingularCovariance(const std::string& what, double determinant)
      : NumericError(what), determinant_(determinant) {}
  double determinant() const noexcept { return determinant_; }

 private:
  double determinant_;
};

}  // namespace ecdkit
