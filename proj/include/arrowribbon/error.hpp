#pragma once

#include <stdexcept>
#include <string>

namespace arrowribbon {

enum class Errc {
  InvalidArgument,
  Parse,
  InvalidGraph,
  UnknownEdge,
  MissingSigns,
  NonInvertibleSubstitution,
  SizeLimit,
  InvalidLink,
  MoveMismatch,
};

/// Every library failure is reported as an Error carrying a category code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace arrowribbon
