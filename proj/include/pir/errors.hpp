#pragma once

#include <stdexcept>
#include <string>

namespace pir {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParams : Error {
  using Error::Error;
};
struct FieldMismatch : Error {
  using Error::Error;
};
struct DivideByZero : Error {
  using Error::Error;
};
struct SingularMatrix : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct FieldTooSmall : Error {
  using Error::Error;
};
struct InsufficientPoints : Error {
  using Error::Error;
};
struct InconsistentPoints : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};
struct WrongRegime : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct MalformedTranscript : Error {
  using Error::Error;
};
struct EnumerationTooLarge : Error {
  using Error::Error;
};
struct MalformedFrame : Error {
  using Error::Error;
};
struct NodeUnreachable : Error {
  using Error::Error;
};
struct ReconstructionMismatch : Error {
  using Error::Error;
};

}  // namespace pir
