#pragma once

#include <stdexcept>
#include <string>

namespace hrs {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownSymbol : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};
struct InstanceMismatch : Error {
  using Error::Error;
};
struct EmptySet : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotAGroebnerBasis : Error {
  using Error::Error;
};
struct InstanceTooLarge : Error {
  using Error::Error;
};
struct NotBinary : Error {
  using Error::Error;
};
struct MissingAllOnes : Error {
  using Error::Error;
};
struct MissingSeed : Error {
  using Error::Error;
};
struct NotAWitness : Error {
  using Error::Error;
};
struct BadSize : Error {
  using Error::Error;
};
struct InputNotResolving : Error {
  using Error::Error;
};
struct QuotaUnreachable : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace hrs
