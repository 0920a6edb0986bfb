#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brtk {

  // Base class of everything the library throws.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A table or descriptor does not describe the claimed structure.
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  // A construction would exceed its configured size bound.
  class SizeLimitError : public Error {
   public:
    SizeLimitError(std::string const& what, std::size_t reached)
        : Error(what), _reached(reached) {}

    std::size_t reached() const noexcept {
      return _reached;
    }

   private:
    std::size_t _reached;
  };

  // An operation needing an inverse semigroup got something else.
  class NotInverseError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& msg)
        : Error("line " + std::to_string(line) + ": " + msg), _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

}  // namespace brtk
