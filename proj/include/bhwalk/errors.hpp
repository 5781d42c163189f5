#pragma once

#include <stdexcept>

namespace bhw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lattice or basis parameters out of range (N < 3, bad site index, ...).
struct InvalidLatticeError : Error {
  using Error::Error;
};

// Operands built over different lattices/bases.
struct BasisMismatchError : Error {
  using Error::Error;
};

// Operation needs a symmetry that does not exist on this ring
// (boost phases are not single-valued on odd N).
struct SymmetryUndefinedError : Error {
  using Error::Error;
};

// Numerical backend failure (eigensolver non-convergence, broken
// momentum resolution, mismatched spectra).
struct NumericalFailureError : Error {
  using Error::Error;
};

// A state or map that is identically zero where a normalizable one is required.
struct DegenerateStateError : Error {
  using Error::Error;
};

// Requested sector carries no probability.
struct EmptySectorError : Error {
  using Error::Error;
};

}  // namespace bhw
