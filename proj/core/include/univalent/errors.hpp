#pragma once

#include <stdexcept>

namespace univalent {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by a series whose constant term vanishes.
class ConstantTermZero : public Error {
 public:
  using Error::Error;
};

/// A catalog parameter or a Mobius parameter is outside its legal range.
class ParamOutOfRange : public Error {
 public:
  using Error::Error;
};

/// h'(z) vanishes (numerically) where a dilatation was requested.
class DerivativeZero : public Error {
 public:
  using Error::Error;
};

/// Shear dilatation with |omega(0)| >= 1.
class BadDilatation : public Error {
 public:
  using Error::Error;
};

/// Shear target with F(0) != 0.
class BadTarget : public Error {
 public:
  using Error::Error;
};

/// Conjecture tag does not apply to the given map.
class IncompatibleTag : public Error {
 public:
  using Error::Error;
};

/// A value that exact mode cannot represent (irrational direction, ...).
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, series files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Point outside the region where an evaluator is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace univalent
