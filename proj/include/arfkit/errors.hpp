#pragma once

#include <stdexcept>
#include <string>

namespace arfkit {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed user input: empty generator list, non-positive entries,
  //! unparseable text.
  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  //! The generators do not define a numerical semigroup (gcd != 1), or a
  //! membership table is not closed under addition.
  class InvalidSemigroup : public Error {
   public:
    using Error::Error;
  };

  //! An operation was called outside its domain.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  //! Two relative ideals live over different semigroups.
  class AmbientMismatch : public DomainError {
   public:
    using DomainError::DomainError;
  };

}  // namespace arfkit
