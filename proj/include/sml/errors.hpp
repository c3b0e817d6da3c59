#pragma once

#include <stdexcept>
#include <string>

namespace sml {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An assortment references a product id the instance does not contain.
class InvalidAssortmentError : public Error {
  public:
    using Error::Error;
};

/// An operation was called outside its mathematical domain
/// (empty set where a nonempty one is required, non-member product, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A two-level (SML) operation was applied to an instance with deeper levels.
class UnsupportedModelError : public Error {
  public:
    using Error::Error;
};

/// An enumeration would exceed its configured size cap.
class ResourceLimitError : public Error {
  public:
    using Error::Error;
};

/// An experiment family configuration is invalid.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// An instance document failed to parse or validate.
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace sml
