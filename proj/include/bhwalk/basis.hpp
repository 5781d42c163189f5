#pragma once

#include <utility>
#include <vector>

#include "bhwalk/errors.hpp"

namespace bhw {

// Ordered basis of symmetrized two-boson states |i,j>_s with
// 1 <= i <= j <= N, enumerated lexicographically. dim = N(N+1)/2.
class SymmetrizedBasis {
 public:
  explicit SymmetrizedBasis(int N);

  int sites() const { return N_; }
  int dim() const { return static_cast<int>(entries_.size()); }

  // flat index of |i,j>_s; requires 1 <= i <= j <= N
  int index(int i, int j) const;

  const std::pair<int, int>& pair(int k) const { return entries_[k]; }
  const std::vector<std::pair<int, int>>& entries() const { return entries_; }

  bool operator==(const SymmetrizedBasis& other) const { return N_ == other.N_; }

 private:
  int N_;
  std::vector<std::pair<int, int>> entries_;
};

SymmetrizedBasis build_basis(int N);

}  // namespace bhw
