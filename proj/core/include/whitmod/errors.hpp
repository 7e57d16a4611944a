#pragma once

#include <stdexcept>
#include <string>

namespace whitmod {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degrees of different rank were mixed.
struct DimensionError : Error {
  using Error::Error;
};

// A rewriting step or basis request left the algebra's validated window.
struct WindowError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// Algebra-spec document violates the schema or the Q-good bound.
struct SpecError : Error {
  using Error::Error;
};

// Character assignment contradicts a bracket relation.
struct CharacterError : Error {
  using Error::Error;
};

// Ideal substitution not supported (e.g. eliminates a nonzero-level central).
struct IdealError : Error {
  using Error::Error;
};

// Statistics of the zero vector requested.
struct ZeroVectorError : Error {
  using Error::Error;
};

// Probe set fails to Lie-generate the positive part of the window.
struct GenerationError : Error {
  using Error::Error;
};

}  // namespace whitmod
