#include "bhwalk/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

namespace bhw {

namespace {

inline int ring_next(int i, int N) { return i % N + 1; }
inline int ring_prev(int i, int N) { return (i + N - 2) % N + 1; }

}  // namespace

HamiltonianMatrix build_hamiltonian(const LatticeConfig& config) {
  const int N = config.N;
  const double J = config.J;
  const double V = config.V;
  SymmetrizedBasis basis(N);
  const int dim = basis.dim();
  const double hop2 = -std::sqrt(2.0) * J;  // doublon <-> adjacent pair

  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const auto [i, j] = basis.pair(k);
    if (i == j) {
      H(k, k) += V;
      // one boson hops off the doublon; sqrt(2) from the pair occupancy
      for (int t : {ring_next(i, N), ring_prev(i, N)})
        H(basis.index(std::min(t, i), std::max(t, i)), k) += hop2;
    } else {
      // move either particle to a ring neighbor; landing on the partner
      // site forms a doublon and picks up the same sqrt(2)
      for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        for (int t : {ring_next(a, N), ring_prev(a, N)}) {
          const int row = basis.index(std::min(t, b), std::max(t, b));
          H(row, k) += (t == b) ? hop2 : -J;
        }
      }
    }
  }
  return HamiltonianMatrix{config, std::move(basis), std::move(H)};
}

}  // namespace bhw
