#pragma once

#include <stdexcept>
#include <string>

namespace eulercat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact linear algebra
struct DimensionMismatch : Error {
  using Error::Error;
};

// hom-objects and measures
struct InvalidHomObject : Error {
  using Error::Error;
};
struct VariantNotMeasurable : Error {
  using Error::Error;
};
struct MixedVariants : Error {
  using Error::Error;
};
struct ChiUndefined : Error {
  using Error::Error;
};

// categories
struct InvalidCategory : Error {
  using Error::Error;
};
struct InvalidFunctor : Error {
  using Error::Error;
};
struct EnrichmentMismatch : Error {
  using Error::Error;
};
struct UnknownObject : Error {
  using Error::Error;
};
struct MissingClassSize : Error {
  using Error::Error;
};
struct NotAGroupoid : Error {
  using Error::Error;
};
struct NotAnIsofibration : Error {
  using Error::Error;
};
struct NotA2Groupoid : Error {
  using Error::Error;
};

// topological categories and stratified spaces
struct NotAcyclic : Error {
  using Error::Error;
};
struct CertificateFailed : Error {
  using Error::Error;
};
struct InvalidDescriptor : Error {
  using Error::Error;
};

// input handling
struct ParseError : Error {
  using Error::Error;
};

}  // namespace eulercat
