#pragma once

#include <stdexcept>
#include <string>

namespace cubetile {

/// Base for every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The input names the same translate twice (possibly modulo the period).
class DuplicateTranslate : public Error {
 public:
  using Error::Error;
};

/// Two translates were mapped onto the same image point by a slide.
class TranslateCollision : public Error {
 public:
  using Error::Error;
};

class GridTooLarge : public Error {
 public:
  using Error::Error;
};

/// An operation that needs an orthogonal translate set was handed one that is not.
class NotOrthogonal : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubetile
