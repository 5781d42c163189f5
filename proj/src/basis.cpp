#include "bhwalk/basis.hpp"

#include <string>

namespace bhw {

SymmetrizedBasis::SymmetrizedBasis(int N) : N_(N) {
  if (N < 3)
    throw InvalidLatticeError("basis needs at least 3 sites, got " +
                              std::to_string(N));
  entries_.reserve(N * (N + 1) / 2);
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j) entries_.emplace_back(i, j);
}

int SymmetrizedBasis::index(int i, int j) const {
  if (i < 1 || j < i || j > N_)
    throw InvalidLatticeError("basis index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") out of range for N=" +
                              std::to_string(N_));
  // row i starts after (i-1) rows of lengths N, N-1, ...
  return (i - 1) * N_ - (i - 1) * (i - 2) / 2 + (j - i);
}

SymmetrizedBasis build_basis(int N) { return SymmetrizedBasis(N); }

}  // namespace bhw
