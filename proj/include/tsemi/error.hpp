#ifndef TSEMI_ERROR_HPP
#define TSEMI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tsemi {

  // Base for every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Operands live on different state sets, or a map is not total.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // An element-count or size cap was exceeded.
  class ResourceLimitError : public Error {
   public:
    using Error::Error;
  };

  // The input relation is not reflexive or not transitive.
  class MalformedPreorderError : public Error {
   public:
    using Error::Error;
  };

  // A caller broke an operation's precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Two computations that must agree did not. Always a bug.
  class ConsistencyError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

  // Entry out of range or wrong arity in an otherwise well-formed input.
  class ValidationError : public ParseError {
   public:
    using ParseError::ParseError;
  };

}  // namespace tsemi

#endif  // TSEMI_ERROR_HPP
