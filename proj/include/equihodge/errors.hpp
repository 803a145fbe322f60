#pragma once

#include <stdexcept>
#include <string>

namespace equihodge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input. `path()` points into the input document
/// (e.g. "group.mult" or "action.generators[0].vertex_map").
class ValidationError : public Error {
 public:
  ValidationError(std::string path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// The request is well-formed but outside what the operation supports.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An internal mathematical invariant failed (D^2 != 0, Euler-Poincare
/// mismatch, singular Gram matrix, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

}  // namespace equihodge
