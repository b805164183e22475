#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace flt {

// Base for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

// Non-finite loss or gradient; carries the offending layer (or npos for the loss itself).
class NumericError : public Error {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  NumericError(const std::string& what, std::size_t layer) : Error(what), layer_(layer) {}
  std::size_t layer() const noexcept { return layer_; }

 private:
  std::size_t layer_;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace flt
