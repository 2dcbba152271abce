#pragma once
// Error taxonomy.  Everything the library can refuse surfaces as a subtype of
// CubeError so callers (and the command-line tool) can tell impossible
// requests apart from plain bad arguments, which throw std::invalid_argument.

#include <stdexcept>

namespace cubesym {

struct CubeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A point set that cannot be ordered into a linear sequence.
struct NotALineError : CubeError {
  using CubeError::CubeError;
};

// A value permutation that breaks the palindromic pairing i <-> n-1-i.
struct SymmetryViolationError : CubeError {
  using CubeError::CubeError;
};

// A point or vertex map that is not a bijection.
struct NotABijectionError : CubeError {
  using CubeError::CubeError;
};

// A point map that is a bijection but does not preserve lines.
struct NotAnAutomorphismError : CubeError {
  using CubeError::CubeError;
};

// A group element whose coordinate part is not the identity where one is
// required.
struct NotAValuePermutationError : CubeError {
  using CubeError::CubeError;
};

// A value permutation that strays outside the index range it must preserve.
struct RangeViolationError : CubeError {
  using CubeError::CubeError;
};

// An enumeration whose size exceeds the caller-supplied cap.
struct CapExceededError : CubeError {
  using CubeError::CubeError;
};

// A computation whose size exceeds a hard built-in guard (overflow, or a
// brute-force search that would never finish).
struct TooLargeError : CubeError {
  using CubeError::CubeError;
};

// A request that is well-formed but intentionally outside what the
// operation handles.
struct UnsupportedError : CubeError {
  using CubeError::CubeError;
};

// Graph inputs the reduction rejects.
struct EmptyGraphError : CubeError {
  using CubeError::CubeError;
};
struct IsolatedVertexError : CubeError {
  using CubeError::CubeError;
};

// Malformed textual input (JSON, board strings, graph files).
struct ParseError : CubeError {
  using CubeError::CubeError;
};

}  // namespace cubesym
