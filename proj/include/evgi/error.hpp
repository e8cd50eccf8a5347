#pragma once

#include <stdexcept>
#include <string>

namespace evgi
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (graph files, JSON fixtures).
class InputError : public Error
{
public:
  using Error::Error;
};

/// Explicit listing of a geometric automorphism group exceeded the cap.
class CapExceeded : public Error
{
public:
  using Error::Error;
};

/// A numerical guard failed (non-convergence, inconsistent quantization).
class ToleranceError : public Error
{
public:
  using Error::Error;
};

/// An internal invariant was violated.
class InternalError : public Error
{
public:
  using Error::Error;
};

} // namespace evgi
