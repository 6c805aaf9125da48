#pragma once

#include <stdexcept>
#include <string>

namespace parconv {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct YOutsideBox : Error {
  using Error::Error;
};

struct EmptyPolytope : Error {
  using Error::Error;
};

struct PointInsideSet : Error {
  using Error::Error;
};

/// No big-M up to the search cap validates; carries the worst sample.
struct BigMSearchFailed : Error {
  using Error::Error;
};

/// Slice interior too small for coefficient recovery at a grid point.
struct DegenerateSlice : Error {
  std::size_t grid_index;
  DegenerateSlice(std::size_t index, const std::string& what)
      : Error(what), grid_index(index) {}
};

struct SingularSystem : Error {
  std::size_t grid_index;
  SingularSystem(std::size_t index, const std::string& what)
      : Error(what), grid_index(index) {}
};

struct GridNotTensor : Error {
  using Error::Error;
};

struct NotRegular : Error {
  using Error::Error;
};

struct DimensionTooLarge : Error {
  using Error::Error;
};

struct ConeNotPointed : Error {
  using Error::Error;
};

struct NotIsometry : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace parconv
