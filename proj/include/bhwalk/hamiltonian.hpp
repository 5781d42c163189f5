#pragma once

#include <Eigen/Dense>

#include "bhwalk/basis.hpp"
#include "bhwalk/lattice.hpp"

namespace bhw {

struct HamiltonianMatrix {
  LatticeConfig config;
  SymmetrizedBasis basis;
  Eigen::MatrixXd elements;  // real symmetric, dim x dim
};

// Two-boson ring Hamiltonian
//   H = -J * sum_i (c_{i+1}^dag c_i + h.c.) + (V/2) * sum_i n_i (n_i - 1)
// in the symmetrized basis. Diagonal is V on doubly occupied pairs, 0
// elsewhere; hopping entries are -J, or -sqrt(2) J on transitions between
// |i,i>_s and an adjacent pair.
HamiltonianMatrix build_hamiltonian(const LatticeConfig& config);

}  // namespace bhw
